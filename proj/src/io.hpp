// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ARB_SRC_IO_HPP
#define ARB_SRC_IO_HPP

#include <string>

namespace arb {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace arb

#endif  // ARB_SRC_IO_HPP
