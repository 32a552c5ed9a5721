#ifndef PHX_DOCUMENT_HPP
#define PHX_DOCUMENT_HPP

// Line-oriented text document:
//
//   PHX 1
//   [criteria]      id <TAB> name <TAB> root
//   [branches]      criterion-id <TAB> branch-id <TAB> label
//   [collections]   index <TAB> simple collection
//   [unions]        index <TAB> expression
//   [categories]    name <TAB> root|container <TAB> expression
//   [objects]       object-id <TAB> expression [<TAB> payload]
//
// Category and object expressions equal to a criterion root are written as
// @r<criterion-id>. Others occurring more than once are interned in
// [collections] or [unions] and referenced as @c<index> or @u<index>.

#include "phx/polyhierarchy.hpp"
#include "phx/universe.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace phx {

inline constexpr int kFormatVersion = 1;

struct Taxonomy {
    GeneratingPolyhierarchy gp;
    Universe universe;
};

std::string serialize(const Taxonomy& taxonomy);

/// Throws FormatError (with line), VersionUnsupported, CorruptDocument.
Taxonomy deserialize(std::string_view text);

/// Writes through a temporary file and renames it. Throws IoError.
void save(const Taxonomy& taxonomy, const std::filesystem::path& path);
Taxonomy load(const std::filesystem::path& path);

} // namespace phx

#endif
