// SPDX-License-Identifier: Apache-2.0
//
// fdmimo - full-duplex large-scale MIMO self-interference cancellation simulator
// Copyright (C) 2026 The fdmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "fdmimo/system_config.hpp"

#include <string>

#include "fdmimo/errors.hpp"

namespace fdmimo {

void SystemConfig::validate() const
{
    if (K < 1)
        throw ConfigError("invalid config: K >= 1 violated (K = " + std::to_string(K) + ")");
    if (N <= K)
        throw ConfigError("invalid config: N > K violated (N = " + std::to_string(N) + ", K = " + std::to_string(K) +
                          ")");
    if (M < N + K)
        throw ConfigError("invalid config: M >= N + K violated (M = " + std::to_string(M) +
                          ", N + K = " + std::to_string(N + K) + ")");
    // -inf dB is a linear zero and is allowed except for the cancellation divisor
    const double dbs[] = {rho_t_db, beta_ue_db, beta_si_db, rho_ul_db};
    for (double v : dbs)
        if (std::isnan(v) || v == INFINITY)
            throw ConfigError("invalid config: dB parameters must be below +inf and not NaN");
    if (!std::isfinite(alpha_anc_db))
        throw ConfigError("invalid config: alpha_anc_db must be finite");
    if (!std::isfinite(nmse) || nmse < 0.0)
        throw ConfigError("invalid config: nmse >= 0 violated (nmse = " + std::to_string(nmse) + ")");
}

} // namespace fdmimo
