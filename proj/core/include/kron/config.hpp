#pragma once

namespace kron {

/// Largest n for which the character oracle will build tables. Initialised
/// from KRONFAM_ORACLE_CAP when set, otherwise 25.
int oracle_cap();
void set_oracle_cap(int cap);
/// True when the oracle may run at size n; a cap of 0 disables it.
bool oracle_allows(int n);

/// Worker count for grid sweeps. Initialised from KRONFAM_THREADS when set,
/// otherwise 1.
int thread_count();
void set_thread_count(int threads);

}  // namespace kron
