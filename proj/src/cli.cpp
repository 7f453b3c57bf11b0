#include "hextile/cli.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "hextile/aggregate.hpp"
#include "hextile/render.hpp"

namespace hextile {

namespace {

int checked_side(long long n) {
  if (n < 0 || n > std::numeric_limits<int>::max())
    throw UsageError("hexagon side out of range: " + std::to_string(n));
  return static_cast<int>(n);
}

Integer distinct_checked(const SubgroupLattice& lattice, int n) {
  Integer mob = distinct_count_mobius(lattice, n);
  Integer simp = distinct_count_simplified(n);
  if (mob != simp) {
    std::ostringstream msg;
    msg << "distinct-count routes disagree at n=" << n << ": mobius " << mob
        << ", simplified " << simp;
    throw std::logic_error(msg.str());
  }
  return mob;
}

}  // namespace

SeqClass seq_class_from_name(const std::string& name) {
  if (name == "distinct") return std::nullopt;
  if (auto c = class_from_name(name)) return *c;
  throw UsageError("unknown class '" + name +
                   "' (expected any, vertex-reflection, edge-reflection, half-turn, "
                   "rot120, rot60 or distinct)");
}

std::vector<BFileEntry> read_b_file(std::istream& in, const std::string& name) {
  std::vector<BFileEntry> entries;
  std::string line;
  long long lineno = 0;
  auto fail = [&](const std::string& what) {
    throw IoError(name + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    long long idx = 0;
    std::string value_token, extra;
    if (!(ls >> idx >> value_token)) fail("malformed b-file line (want 'index value')");
    if (ls >> extra) fail("trailing tokens after value");
    BFileEntry entry;
    entry.index = idx;
    try {
      entry.value = Integer(value_token);
    } catch (const std::exception&) {
      fail("value is not an integer: '" + value_token + "'");
    }
    if (!entries.empty() && entries.back().index >= idx)
      fail("indices must be strictly increasing");
    entries.push_back(std::move(entry));
  }
  return entries;
}

int run_seq(std::ostream& out, long long first, long long last, SeqClass cls) {
  if (first < 0 || first > last)
    throw UsageError("need 0 <= first <= last");
  std::optional<SubgroupLattice> lattice;
  if (!cls) lattice.emplace(enumerate_subgroups());
  for (long long n = first; n <= last; ++n) {
    Integer v = cls ? count_for_class(*cls, checked_side(n))
                    : distinct_checked(*lattice, checked_side(n));
    out << n << ' ' << v << '\n';
  }
  return 0;
}

int run_weights(std::ostream& out) {
  SubgroupLattice lattice = enumerate_subgroups();
  out << std::left << std::setw(12) << "subgroup" << std::right << std::setw(6) << "order"
      << std::setw(6) << "index" << std::setw(6) << "class" << "  weight\n";
  Rational sum = 0;
  for (int i = 0; i < lattice.size(); ++i) {
    const Subgroup& s = lattice.subgroup(i);
    out << std::left << std::setw(12) << lattice.label(i) << std::right << std::setw(6)
        << s.order() << std::setw(6) << s.index() << std::setw(6)
        << lattice.conjugacy_class(i) << "  " << lattice.weight(i) << '\n';
    sum += lattice.weight(i);
  }
  if (sum != 1) throw std::logic_error("subgroup weights do not sum to 1");
  out << "sum of weights: " << sum << '\n';
  return 0;
}

int run_verify(std::ostream& out, int max_n, const OracleOptions& opts) {
  SubgroupLattice lattice = enumerate_subgroups();
  for (int n = 0; n <= max_n; ++n) {
    Census c = census(lattice, n, opts);

    for (GroupElement x : all_elements()) {
      Integer formula = count_for_class(class_of_element(x), n);
      Integer oracle(c.fixed_by_element[x.index()]);
      if (formula != oracle) {
        out << "FAIL n=" << n << " fixed[" << element_label(x) << "] expected " << formula
            << " actual " << oracle << '\n';
        return 1;
      }
      out << "n=" << n << " fixed[" << element_label(x) << "] " << formula << " == "
          << oracle << " ok\n";
    }

    Integer fix_sum = 0;
    for (int e = 0; e < 12; ++e) fix_sum += c.fixed_by_element[e];
    if (fix_sum != Integer(12) * Integer(c.orbit_count)) {
      out << "FAIL n=" << n << " burnside expected 12*" << c.orbit_count << " actual "
          << fix_sum << '\n';
      return 1;
    }
    out << "n=" << n << " burnside sum(fix) " << fix_sum << " == 12*" << c.orbit_count
        << " ok\n";

    for (int g = 0; g < lattice.size(); ++g) {
      auto cls = class_of_subgroup(lattice.subgroup(g));
      if (!cls) continue;
      Integer formula = count_for_class(*cls, n);
      Integer stab_sum = c.at_least_count(lattice, g);
      if (formula != stab_sum) {
        out << "FAIL n=" << n << " stabilizer-sum " << lattice.label(g) << " expected "
            << formula << " actual " << stab_sum << '\n';
        return 1;
      }
    }
    out << "n=" << n << " stabilizer-sums match formulas (10 subgroups) ok\n";

    for (int g = 0; g < lattice.size(); ++g) {
      Integer inv = exact_symmetry_count(lattice, g, n, &c);
      if (inv != Integer(c.exact_stabilizer[g])) {
        out << "FAIL n=" << n << " mobius-inversion " << lattice.label(g) << " expected "
            << c.exact_stabilizer[g] << " actual " << inv << '\n';
        return 1;
      }
    }
    out << "n=" << n << " mobius-inversion census (16 subgroups) ok\n";

    Rational normalized = 0;
    for (int g = 0; g < lattice.size(); ++g)
      normalized += Rational(Integer(c.exact_stabilizer[g]),
                             Integer(lattice.subgroup(g).index()));
    if (normalized != Rational(Integer(c.orbit_count))) {
      out << "FAIL n=" << n << " coset-normalization expected " << c.orbit_count
          << " actual " << normalized << '\n';
      return 1;
    }
    out << "n=" << n << " coset-normalization " << normalized << " == " << c.orbit_count
        << " ok\n";

    Integer simp = distinct_count_simplified(n);
    Integer mob = distinct_count_mobius(lattice, n);
    if (simp != mob || simp != Integer(c.orbit_count)) {
      out << "FAIL n=" << n << " distinct simplified " << simp << " mobius " << mob
          << " oracle " << c.orbit_count << '\n';
      return 1;
    }
    out << "n=" << n << " distinct " << simp << " == " << c.orbit_count << " ok\n";
  }
  out << "verify: all checks passed for n <= " << max_n << '\n';
  return 0;
}

int run_census(std::ostream& out, int n, const OracleOptions& opts) {
  SubgroupLattice lattice = enumerate_subgroups();
  out << census_to_json(census(lattice, n, opts), lattice);
  return 0;
}

int run_compare(std::ostream& out, const std::string& path, SeqClass cls,
                long long offset) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<BFileEntry> entries = read_b_file(in, path);
  std::optional<SubgroupLattice> lattice;
  if (!cls) lattice.emplace(enumerate_subgroups());
  long long mismatches = 0;
  for (const BFileEntry& e : entries) {
    long long n = e.index + offset;
    if (n < 0)
      throw UsageError(path + ": index " + std::to_string(e.index) + " with offset " +
                       std::to_string(offset) + " gives a negative side");
    Integer got = cls ? count_for_class(*cls, checked_side(n))
                      : distinct_checked(*lattice, checked_side(n));
    if (got != e.value) {
      ++mismatches;
      out << "MISMATCH index " << e.index << " (n=" << n << ") file " << e.value
          << " computed " << got << '\n';
    }
  }
  if (mismatches == 0) {
    out << "compare: " << entries.size() << " entries, all match\n";
    return 0;
  }
  out << "compare: " << mismatches << " of " << entries.size() << " entries mismatch\n";
  return 1;
}

int run_render(std::ostream& out, int n, std::uint64_t index, const std::string& out_path,
               const OracleOptions& opts) {
  std::string svg = render_tiling_svg(n, index, opts);
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw IoError("cannot open " + out_path + " for writing");
  f << svg;
  if (!f.good()) throw IoError("failed writing " + out_path);
  out << "wrote " << out_path << '\n';
  return 0;
}

}  // namespace hextile
