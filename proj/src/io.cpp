// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <fstream>
#include <sstream>

#include "arb/error.hpp"

namespace arb {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
    out << text;
    if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace arb
