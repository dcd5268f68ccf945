#pragma once

#include <string>
#include <vector>

#include "unram/group/mat_group.hpp"

namespace unram::cli {

using exactla::IntMatrix;

// Text group file:
//
//   # comment (a '#' starts a comment anywhere on a line)
//   name: q8n_1
//   note: free text, any number of note lines
//   dimension: 4
//   generator:
//     0 1 0 0
//     ...            (d rows of d integers)
//   generator:
//     ...
//
// Generators act on row vectors from the right. Zero generators describe
// the trivial group.
struct GroupFile {
  std::string name;
  std::vector<std::string> notes;
  std::size_t dimension = 0;
  std::vector<IntMatrix> generators;

  bool operator==(const GroupFile&) const = default;
};

// Throws InputError naming the line of the first problem.
GroupFile parse_group_file(const std::string& text);
GroupFile read_group_file(const std::string& path);
// Canonical form: comments dropped, keys in fixed order, single spaces.
std::string emit_group_file(const GroupFile& f);

GroupFile group_file_of(const group::MatGroup& g, const std::string& name);
group::MatGroup close_group_file(const GroupFile& f);

}  // namespace unram::cli
