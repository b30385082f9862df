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
#include "fdmimo/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <string>
#include <utility>

namespace fdmimo {

namespace {

std::mutex& sink_mutex()
{
    static std::mutex m;
    return m;
}

DiagnosticSink& current_sink()
{
    static DiagnosticSink sink = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
    return sink;
}

} // namespace

DiagnosticSink set_diagnostic_sink(DiagnosticSink sink)
{
    std::lock_guard lock(sink_mutex());
    return std::exchange(current_sink(), std::move(sink));
}

void warn(std::string_view message)
{
    std::lock_guard lock(sink_mutex());
    if (current_sink())
        current_sink()(message);
}

} // namespace fdmimo
