/*
   Copyright 2026 The bellchain authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>

namespace bellchain {

/// An estimator was asked for more than its sample supports (starved setting
/// pair, undersized cell). Maps to CLI exit code 4.
class insufficient_data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent experiment configuration. Maps to CLI exit code 2.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bellchain
