#pragma once

#include "bochert/group.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bochert {

enum class Family { symmetric, alternating, cyclic, dihedral, pgl2, psl2, mathieu };

Family parse_family(std::string_view name);
std::string to_string(Family f);

/// Short label used on the command line: S5, A6, C6, D4, PGL2_7, PSL2_7, M11.
std::string catalog_label(Family f, unsigned param);

/// Built-in group, validated against its known degree, order and transitivity degree.
/// Throws PreconditionError for unknown names or invalid parameters and Error if validation
/// fails.
Group load_builtin(Family f, unsigned param);
Group load_builtin(std::string_view label);
GeneratorSet builtin(Family f, unsigned param);

/// Expected (degree, order, transitivity degree) for a builtin.
struct BuiltinMetadata {
  std::size_t degree;
  Integer order;
  std::size_t transitivity;
};
BuiltinMetadata builtin_metadata(Family f, unsigned param);

/// Every catalog label with group order at most `max_order`.
std::vector<std::string> catalog_labels(const Integer &max_order);

/// Parses the .perm text format; errors carry the 1-based line number.
GeneratorSet parse_generator_text(std::string_view text, std::string label = {});
std::string format_generator_text(const GeneratorSet &gens);

GeneratorSet load_generator_file(const std::filesystem::path &path);
void save_generator_file(const GeneratorSet &gens, const std::filesystem::path &path);

/// "catalog:<label>" or "file:<path>".
Group resolve_group_spec(std::string_view spec);

} // namespace bochert
