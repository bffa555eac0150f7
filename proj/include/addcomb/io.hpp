#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "addcomb/convolution.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/finite_set.hpp"

namespace addcomb {

/// One element per line (`p` or `p/q`); `#` starts a comment, blank lines
/// are skipped. Duplicates collapse. Throws ParseError with the line.
FiniteRealSet read_set(std::istream& in);
FiniteRealSet read_set_file(const std::string& path);

/// Canonical form: optional `# ` comment lines, then sorted elements.
void write_set(std::ostream& out, const FiniteRealSet& a, const std::string& comment = {});
void write_set_file(const std::string& path, const FiniteRealSet& a, const std::string& comment = {});

/// `value,count` rows sorted by value.
void write_rep_csv(std::ostream& out, const RepFunction& r);
/// `shift1,…,shift{k−1},count` rows in table order.
void write_conv_csv(std::ostream& out, const std::vector<ConvolutionPoint>& table);

/// FNV-1a 64 of a file's bytes as 16 hex digits, for run manifests.
std::string file_digest(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace addcomb
