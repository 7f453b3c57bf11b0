#pragma once

// Front-end operations behind the command-line tool.  Each returns a
// process exit code: 0 success, 1 check/comparison failure; usage and I/O
// problems are thrown as UsageError / IoError and mapped to 2 / 3 by main.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hextile/counting.hpp"
#include "hextile/numeric.hpp"
#include "hextile/oracle.hpp"

namespace hextile {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One "index value" line of an OEIS b-file.
struct BFileEntry {
  long long index = 0;
  Integer value;
};

// Parses b-file text: '#' comment lines and blank lines are skipped,
// indices must be strictly increasing.  Malformed input raises IoError
// naming the line.
std::vector<BFileEntry> read_b_file(std::istream& in, const std::string& name);

// nullopt means the distinct-up-to-symmetry count.
using SeqClass = std::optional<SymmetryClass>;

SeqClass seq_class_from_name(const std::string& name);  // UsageError on bad name

int run_seq(std::ostream& out, long long first, long long last, SeqClass cls);
int run_weights(std::ostream& out);
int run_verify(std::ostream& out, int max_n, const OracleOptions& opts);
int run_census(std::ostream& out, int n, const OracleOptions& opts);
int run_compare(std::ostream& out, const std::string& path, SeqClass cls,
                long long offset);
int run_render(std::ostream& out, int n, std::uint64_t index, const std::string& out_path,
               const OracleOptions& opts);

}  // namespace hextile
