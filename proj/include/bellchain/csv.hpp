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

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellchain::csvio {

/// Shortest round-trip decimal form, '.' separator, locale-independent.
inline std::string format_double(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t x)
{
    return std::to_string(x);
}

/// Header-first CSV writer with LF line endings, byte-deterministic for
/// identical inputs.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
        : out_(path, std::ios::binary)
    {
        if (!out_) {
            throw std::runtime_error("cannot open CSV file for writing: " + path.string());
        }
        bool first = true;
        for (const auto col : header) {
            if (!first) out_ << ',';
            out_ << col;
            first = false;
        }
        out_ << '\n';
    }

    void row(std::initializer_list<std::string> cells)
    {
        bool first = true;
        for (const auto& cell : cells) {
            if (!first) out_ << ',';
            out_ << cell;
            first = false;
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

} // namespace bellchain::csvio
