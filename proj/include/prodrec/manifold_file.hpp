#ifndef PRODREC_MANIFOLD_FILE_HPP
#define PRODREC_MANIFOLD_FILE_HPP

#include <iosfwd>
#include <string>

#include "prodrec/cohomology.hpp"

namespace prodrec {

/// Parses the line-based manifold description format (see README for the
/// full grammar). Throws ParseError with 1-based line numbers.
ManifoldData read_manifold(std::istream& in);
ManifoldData load_manifold_file(const std::string& path); // adds file context

/// Canonical writer: fixed section order, decimal integers, single spaces,
/// LF line endings. Parsing its output reproduces the data byte-exactly.
void write_manifold(std::ostream& out, const ManifoldData& d, const std::string& comment = "");
std::string manifold_to_string(const ManifoldData& d, const std::string& comment = "");
void save_manifold_file(const std::string& path, const ManifoldData& d,
                        const std::string& comment = "");

/// Square symmetric integer matrix from a plain text file: first line n,
/// then n rows of n entries. '#' comments allowed.
IntMatrix load_gram_file(const std::string& path);

} // namespace prodrec

#endif
