#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eqg/group.hpp"

namespace eqg {

FiniteGroup cyclic_group(std::size_t n);
/// Order 2n, elements r^i s^j at index i + n*j.
FiniteGroup dihedral_group(std::size_t n);
/// Order 4n, elements a^i x^j at index i + 2n*j, with x^2 = a^n and x a x^-1 = a^-1.
FiniteGroup dicyclic_group(std::size_t n);
/// Permutations of {1..n} in lexicographic order, composed right-to-left; registers "alternating".
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup elementary_abelian_group(std::size_t p, std::size_t k);
/// Elements (a, b) ordered lexicographically by factor index.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses a group spec:
///   cyclic:n | dihedral:n | dicyclic:n | symmetric:n | elab:p^k | table:<path> | A x B [x C ...]
/// Throws SpecError on malformed input and InvariantError on an invalid table file.
FiniteGroup make_group(std::string_view spec);

/// Cayley-table JSON: {"name", "order", "labels", "table"}. The identity is moved to index 0.
FiniteGroup group_from_json(const nlohmann::json& doc);
FiniteGroup load_group_file(const std::filesystem::path& path);
nlohmann::ordered_json group_to_json(const FiniteGroup& group);

/// Subgroup selector: an element index list "0,2", "center", "trivial",
/// "all-normal" (every proper normal subgroup) or a registered anchor name.
/// Throws SpecError on an unknown name, InvariantError if a list is no subgroup.
std::vector<Subgroup> resolve_subgroups(const FiniteGroup& group, std::string_view selector);

}  // namespace eqg
