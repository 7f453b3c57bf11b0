#include "hextile/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace hextile {

namespace {

struct Lanes {
  int x[3];
};

Lanes lanes_of(const TriCell& c) { return {{c.u, c.v, c.w()}}; }

TriCell cell_of(const Lanes& l) {
  int sum = l.x[0] + l.x[1] + l.x[2];
  return TriCell{l.x[0], l.x[1], sum == -1 ? Orient::kUp : Orient::kDown};
}

// Every symmetry is "permute the lanes, then optionally x -> -x-1 on all
// three" (the second part flips orientation).
struct LaneMap {
  std::array<int, 3> perm{0, 1, 2};
  bool neg = false;

  Lanes operator()(const Lanes& in) const {
    Lanes out;
    for (int k = 0; k < 3; ++k) {
      out.x[k] = in.x[perm[k]];
      if (neg) out.x[k] = -out.x[k] - 1;
    }
    return out;
  }
};

LaneMap compose(const LaneMap& a, const LaneMap& b) {  // apply b, then a
  LaneMap r;
  for (int k = 0; k < 3; ++k) r.perm[k] = b.perm[a.perm[k]];
  r.neg = a.neg != b.neg;
  return r;
}

const std::array<LaneMap, 12>& lane_maps() {
  static const std::array<LaneMap, 12> maps = [] {
    const LaneMap rot{{2, 0, 1}, true};   // r
    const LaneMap flip{{0, 2, 1}, true};  // f
    std::array<LaneMap, 12> out;
    for (GroupElement g : all_elements()) {
      LaneMap m;
      for (int i = 0; i < g.rot; ++i) m = compose(rot, m);
      if (g.flip) m = compose(flip, m);
      out[g.index()] = m;
    }
    return out;
  }();
  return maps;
}

// Dense geometry for one hexagon size: sorted cells, neighbour lists and
// the 12 cell-index permutations.
struct Board {
  int n = 0;
  int ncells = 0;
  std::vector<TriCell> cells;
  std::vector<std::array<int, 3>> nbrs;      // ascending, -1 padded
  std::array<std::vector<int>, 12> perm;

  int index_of(const TriCell& c) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) return -1;
    return static_cast<int>(it - cells.begin());
  }
};

Board make_board(int n) {
  Board b;
  b.n = n;
  b.cells = hexagon_cells(n);
  b.ncells = static_cast<int>(b.cells.size());
  b.nbrs.resize(b.ncells);
  for (int i = 0; i < b.ncells; ++i) {
    auto& row = b.nbrs[i];
    row.fill(-1);
    int k = 0;
    for (const TriCell& c : cell_neighbors(b.cells[i]))
      if (in_hexagon(n, c)) row[k++] = b.index_of(c);
    std::sort(row.begin(), row.begin() + k);
  }
  for (GroupElement g : all_elements()) {
    auto& p = b.perm[g.index()];
    p.resize(b.ncells);
    for (int i = 0; i < b.ncells; ++i) {
      int j = b.index_of(transform_cell(g, b.cells[i]));
      if (j < 0) throw std::logic_error("hexagon is not closed under the group action");
      p[i] = j;
    }
  }
  return b;
}

void check_bound(int n, const OracleOptions& opts) {
  if (n < 0) throw std::invalid_argument("hexagon side must be nonnegative");
  if (n > opts.max_n) {
    std::ostringstream msg;
    msg << "enumeration of the side-" << n << " hexagon exceeds the safety bound "
        << opts.max_n << "; raise HEXTILE_ORACLE_BOUND or pass an explicit override";
    throw EnumerationBoundError(msg.str());
  }
}

// Perfect-matching backtracking over partner arrays: partner[i] is the cell
// paired with cell i, or -1.  Emit returns false to abort the walk.
template <typename Emit>
bool walk(const Board& b, std::vector<std::int16_t>& partner, int from, Emit&& emit) {
  int i = from;
  while (i < b.ncells && partner[i] >= 0) ++i;
  if (i == b.ncells) return emit(partner);
  for (int j : b.nbrs[i]) {
    if (j < 0 || partner[j] >= 0) continue;
    partner[i] = static_cast<std::int16_t>(j);
    partner[j] = static_cast<std::int16_t>(i);
    bool keep_going = walk(b, partner, i + 1, emit);
    partner[i] = -1;
    partner[j] = -1;
    if (!keep_going) return false;
  }
  return true;
}

Tiling tiling_from_partner(const Board& b, const std::vector<std::int16_t>& partner) {
  Tiling t;
  t.lozenges.reserve(b.ncells / 2);
  for (int i = 0; i < b.ncells; ++i)
    if (partner[i] > i) t.lozenges.emplace_back(b.cells[i], b.cells[partner[i]]);
  std::sort(t.lozenges.begin(), t.lozenges.end());
  return t;
}

// Big-endian two-byte encoding; byte order compares the same way the
// partner arrays do.
std::string encode_partner(const std::vector<std::int16_t>& partner) {
  std::string s(2 * partner.size(), '\0');
  for (size_t i = 0; i < partner.size(); ++i) {
    s[2 * i] = static_cast<char>((partner[i] >> 8) & 0xff);
    s[2 * i + 1] = static_cast<char>(partner[i] & 0xff);
  }
  return s;
}

// Shared per-board census tallies; merged additively across subtrees.
struct CensusAccum {
  std::uint64_t total = 0;
  std::array<std::uint64_t, 12> fixed{};
  std::array<std::uint64_t, 16> stab{};
  std::vector<std::string> forms;

  void merge(CensusAccum&& other) {
    total += other.total;
    for (int i = 0; i < 12; ++i) fixed[i] += other.fixed[i];
    for (int i = 0; i < 16; ++i) stab[i] += other.stab[i];
    forms.insert(forms.end(), std::make_move_iterator(other.forms.begin()),
                 std::make_move_iterator(other.forms.end()));
  }
};

// Maps a 12-bit stabilizer element mask to the lattice subgroup index.
std::unordered_map<std::uint16_t, int> stabilizer_index(const SubgroupLattice& lat) {
  std::unordered_map<std::uint16_t, int> out;
  for (int i = 0; i < lat.size(); ++i) out.emplace(lat.subgroup(i).mask(), i);
  return out;
}

class CensusWorker {
 public:
  CensusWorker(const Board& b, const std::unordered_map<std::uint16_t, int>& stab_index)
      : board_(b), stab_index_(stab_index) {
    image_.resize(b.ncells);
    canonical_.resize(b.ncells);
  }

  CensusAccum& accum() { return acc_; }

  bool operator()(const std::vector<std::int16_t>& partner) {
    ++acc_.total;
    ++acc_.fixed[0];
    std::uint16_t mask = 1;
    canonical_.assign(partner.begin(), partner.end());
    for (int e = 1; e < 12; ++e) {
      const auto& p = board_.perm[e];
      for (int i = 0; i < board_.ncells; ++i)
        image_[p[i]] = static_cast<std::int16_t>(p[partner[i]]);
      if (image_ == partner) {
        mask |= std::uint16_t{1} << e;
        ++acc_.fixed[e];
      }
      if (image_ < canonical_) canonical_ = image_;
    }
    auto it = stab_index_.find(mask);
    if (it == stab_index_.end())
      throw std::logic_error("tiling stabilizer is not a subgroup of the lattice");
    ++acc_.stab[it->second];
    acc_.forms.push_back(encode_partner(canonical_));
    return true;
  }

 private:
  const Board& board_;
  const std::unordered_map<std::uint16_t, int>& stab_index_;
  CensusAccum acc_;
  std::vector<std::int16_t> image_;
  std::vector<std::int16_t> canonical_;
};

// States with exactly `depth` lozenges placed (or complete boards), in
// enumeration order; resuming each one covers every tiling exactly once.
std::vector<std::vector<std::int16_t>> subtree_roots(const Board& b, int depth) {
  std::vector<std::vector<std::int16_t>> roots;
  std::vector<std::int16_t> partner(b.ncells, -1);
  struct Rec {
    const Board& b;
    int depth;
    std::vector<std::vector<std::int16_t>>& roots;
    void operator()(std::vector<std::int16_t>& partner, int from, int placed) const {
      if (placed == depth) {
        roots.push_back(partner);
        return;
      }
      int i = from;
      while (i < b.ncells && partner[i] >= 0) ++i;
      if (i == b.ncells) {
        roots.push_back(partner);
        return;
      }
      for (int j : b.nbrs[i]) {
        if (j < 0 || partner[j] >= 0) continue;
        partner[i] = static_cast<std::int16_t>(j);
        partner[j] = static_cast<std::int16_t>(i);
        (*this)(partner, i + 1, placed + 1);
        partner[i] = -1;
        partner[j] = -1;
      }
    }
  };
  Rec{b, depth, roots}(partner, 0, 0);
  return roots;
}

}  // namespace

Lozenge::Lozenge(TriCell x, TriCell y) {
  auto nb = cell_neighbors(x);
  if (std::find(nb.begin(), nb.end(), y) == nb.end())
    throw std::invalid_argument("lozenge cells must be edge-adjacent");
  a = std::min(x, y);
  b = std::max(x, y);
}

bool in_hexagon(int n, const TriCell& c) {
  auto ok = [n](int x) { return -n <= x && x <= n - 1; };
  return ok(c.u) && ok(c.v) && ok(c.w());
}

std::vector<TriCell> hexagon_cells(int n) {
  if (n < 0) throw std::invalid_argument("hexagon side must be nonnegative");
  std::vector<TriCell> out;
  out.reserve(6 * n * n);
  for (int u = -n; u < n; ++u)
    for (int v = -n; v < n; ++v)
      for (Orient o : {Orient::kUp, Orient::kDown}) {
        TriCell c{u, v, o};
        if (-n <= c.w() && c.w() <= n - 1) out.push_back(c);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<TriCell, 3> cell_neighbors(const TriCell& c) {
  // An up cell meets the down cells one lane lower, and vice versa; the
  // third neighbour shares (u, v) and differs only in w.
  if (c.orient == Orient::kUp)
    return {TriCell{c.u - 1, c.v, Orient::kDown}, TriCell{c.u, c.v - 1, Orient::kDown},
            TriCell{c.u, c.v, Orient::kDown}};
  return {TriCell{c.u + 1, c.v, Orient::kUp}, TriCell{c.u, c.v + 1, Orient::kUp},
          TriCell{c.u, c.v, Orient::kUp}};
}

TriCell transform_cell(GroupElement x, const TriCell& c) {
  return cell_of(lane_maps()[x.index()](lanes_of(c)));
}

Tiling apply_element(GroupElement x, const Tiling& t) {
  Tiling out;
  out.lozenges.reserve(t.lozenges.size());
  for (const Lozenge& l : t.lozenges)
    out.lozenges.emplace_back(transform_cell(x, l.a), transform_cell(x, l.b));
  std::sort(out.lozenges.begin(), out.lozenges.end());
  return out;
}

bool is_valid_tiling(int n, const Tiling& t) {
  std::vector<TriCell> covered;
  for (const Lozenge& l : t.lozenges) {
    covered.push_back(l.a);
    covered.push_back(l.b);
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
  return covered == hexagon_cells(n);
}

int default_safety_bound() {
  if (const char* env = std::getenv("HEXTILE_ORACLE_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return 4;
}

void enumerate_tilings(int n, const std::function<bool(const Tiling&)>& visit,
                       const OracleOptions& opts) {
  check_bound(n, opts);
  Board b = make_board(n);
  std::vector<std::int16_t> partner(b.ncells, -1);
  walk(b, partner, 0, [&](const std::vector<std::int16_t>& p) {
    return visit(tiling_from_partner(b, p));
  });
}

Integer count_tilings(int n, const OracleOptions& opts) {
  check_bound(n, opts);
  Board b = make_board(n);
  std::uint64_t total = 0;
  std::vector<std::int16_t> partner(b.ncells, -1);
  walk(b, partner, 0, [&](const std::vector<std::int16_t>&) {
    ++total;
    return true;
  });
  return Integer(total);
}

Integer fixed_count(int n, GroupElement x, const OracleOptions& opts) {
  check_bound(n, opts);
  Board b = make_board(n);
  const auto& p = b.perm[x.index()];
  std::uint64_t total = 0;
  std::vector<std::int16_t> partner(b.ncells, -1);
  walk(b, partner, 0, [&](const std::vector<std::int16_t>& t) {
    for (int i = 0; i < b.ncells; ++i)
      if (t[p[i]] != p[t[i]]) return true;
    ++total;
    return true;
  });
  return Integer(total);
}

Integer Census::at_least_count(const SubgroupLattice& lattice, int subgroup) const {
  Integer sum = 0;
  for (int h = 0; h < lattice.size(); ++h)
    if (lattice.leq(subgroup, h)) sum += exact_stabilizer[h];
  return sum;
}

Census census(const SubgroupLattice& lattice, int n, const OracleOptions& opts) {
  check_bound(n, opts);
  Board b = make_board(n);
  auto stab_index = stabilizer_index(lattice);

  CensusAccum acc;
  if (opts.jobs <= 1 || b.ncells == 0) {
    CensusWorker worker(b, stab_index);
    std::vector<std::int16_t> partner(b.ncells, -1);
    walk(b, partner, 0, std::ref(worker));
    acc = std::move(worker.accum());
  } else {
    auto roots = subtree_roots(b, std::min(4, b.ncells / 2));
    std::atomic<size_t> next{0};
    int jobs = std::min<int>(opts.jobs, static_cast<int>(roots.size()));
    std::vector<CensusAccum> parts(roots.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          size_t k = next.fetch_add(1);
          if (k >= roots.size()) break;
          CensusWorker worker(b, stab_index);
          std::vector<std::int16_t> partner = roots[k];
          walk(b, partner, 0, std::ref(worker));
          parts[k] = std::move(worker.accum());
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts) acc.merge(std::move(part));
  }

  Census c;
  c.n = n;
  c.total = acc.total;
  c.fixed_by_element = acc.fixed;
  c.exact_stabilizer = acc.stab;
  std::sort(acc.forms.begin(), acc.forms.end());
  std::uint64_t distinct = acc.forms.empty() ? 0 : 1;
  for (size_t i = 1; i < acc.forms.size(); ++i)
    if (acc.forms[i] != acc.forms[i - 1]) ++distinct;
  c.orbit_count = distinct;
  if (opts.keep_canonical_forms) c.canonical_forms = std::move(acc.forms);
  return c;
}

std::string census_to_json(const Census& c, const SubgroupLattice& lattice) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["total"] = c.total;
  nlohmann::ordered_json fixed;
  for (GroupElement g : all_elements())
    fixed[element_label(g)] = c.fixed_by_element[g.index()];
  j["fixed_by_element"] = std::move(fixed);
  nlohmann::ordered_json stab;
  for (int i = 0; i < lattice.size(); ++i)
    stab[lattice.label(i)] = c.exact_stabilizer[i];
  j["exact_stabilizer"] = std::move(stab);
  j["orbit_count"] = c.orbit_count;
  return j.dump(2) + "\n";
}

}  // namespace hextile
