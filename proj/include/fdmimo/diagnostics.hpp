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

#include <functional>
#include <string_view>

namespace fdmimo {

using DiagnosticSink = std::function<void(std::string_view)>;

// Installs a sink for warning diagnostics and returns the previous one.
// The default sink writes "warning: <msg>" lines to standard error.
DiagnosticSink set_diagnostic_sink(DiagnosticSink sink);

void warn(std::string_view message);

} // namespace fdmimo
