// SPDX-License-Identifier: Apache-2.0
//
// fama-lab: fluid-antenna multiple access SIR statistics and Monte-Carlo toolkit
// Copyright (C) 2026 The fama-lab Authors
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

#ifndef FAMA_ERROR_HPP
#define FAMA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fama {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Gram matrix of the reference-port channels is numerically singular.
// Measure-zero under continuous fading; Monte-Carlo callers resample.
class SingularGramError : public std::runtime_error {
public:
    SingularGramError(const std::string &what, double condition)
        : std::runtime_error(what), condition_(condition) {}

    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

// Invalid configuration; key() names the offending setting.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string key, const std::string &message)
        : std::invalid_argument(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

    const std::string &key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace fama

#endif
