#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hasse/group.hpp"

namespace hasse {

/// Canonical text form: {"name":...,"order":n,"table":[[...],...]} and a newline.
std::string to_group_file(const FiniteGroup& group);

/// Throws InputError on malformed text; table validation errors pass through.
FiniteGroup parse_group_file(std::string_view text);

void write_group_file(const FiniteGroup& group, const std::filesystem::path& path);
FiniteGroup read_group_file(const std::filesystem::path& path);

}  // namespace hasse
