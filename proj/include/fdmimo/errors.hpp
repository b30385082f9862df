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
#pragma once

#include <stdexcept>
#include <string>

namespace fdmimo {

// Raised for invalid configuration values or malformed config files.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for per-trial numerical breakdowns. The Monte Carlo engine counts
// these as failed trials instead of propagating them.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegeneratePrecoderError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace fdmimo
