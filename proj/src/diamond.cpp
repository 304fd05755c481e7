#include "aztec/diamond.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace aztec {

Diamond::Diamond(int n) : n_(n) {
  if (n < 1 || n > max_order) throw std::invalid_argument("diamond order must be in [1, " + std::to_string(max_order) + "]");
}

bool Diamond::contains(Cell c) const {
  // |i + 1/2| + |j + 1/2| <= n, doubled to stay in integers.
  return std::abs(2 * c.i + 1) + std::abs(2 * c.j + 1) <= 2 * n_;
}

std::vector<Cell> Diamond::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int j = -n_; j < n_; ++j)
    for (int i = -n_; i < n_; ++i)
      if (contains({i, j})) out.push_back({i, j});
  return out;
}

std::vector<Cell> Diamond::spine() const {
  std::vector<Cell> out;
  for (int i = -n_; i < n_; ++i)
    if (contains({i, i})) out.push_back({i, i});
  return out;
}

BarrierConfig BarrierConfig::parse(std::string_view text) {
  std::vector<Mark> marks;
  marks.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'i': marks.push_back(Mark::Zig); break;
      case 'a': marks.push_back(Mark::Zag); break;
      case '.': marks.push_back(Mark::Zip); break;
      default: throw std::invalid_argument(std::string("barrier string: unexpected character '") + ch + "'");
    }
  }
  return BarrierConfig(std::move(marks));
}

BarrierConfig BarrierConfig::full_signature(const BalancedPartition& p) {
  std::vector<Mark> marks(2 * p.k(), Mark::Zag);
  for (int z : p.zigs()) marks[z - 1] = Mark::Zig;
  return BarrierConfig(std::move(marks));
}

std::string marks_to_string(const std::vector<Mark>& marks) {
  std::string s;
  s.reserve(marks.size());
  for (Mark m : marks) s.push_back(static_cast<char>(m));
  return s;
}

std::string BarrierConfig::to_string() const { return marks_to_string(marks_); }

CellPair make_pair_sorted(Cell a, Cell b) { return a < b ? CellPair{a, b} : CellPair{b, a}; }

std::set<CellPair> blocked_edges(const Diamond& d, const BarrierConfig& cfg) {
  if (cfg.size() != d.spine_length())
    throw std::invalid_argument("barrier config has " + std::to_string(cfg.size()) + " marks, spine has " +
                                std::to_string(d.spine_length()));
  std::set<CellPair> out;
  const auto spine = d.spine();
  auto block = [&](Cell c, Cell other) {
    if (d.contains(other)) out.insert(make_pair_sorted(c, other));
  };
  for (std::size_t p = 0; p < spine.size(); ++p) {
    const Cell c = spine[p];
    switch (cfg.marks()[p]) {
      case Mark::Zig:
        block(c, {c.i, c.j - 1});
        block(c, {c.i + 1, c.j});
        break;
      case Mark::Zag:
        block(c, {c.i, c.j + 1});
        block(c, {c.i - 1, c.j});
        break;
      case Mark::Zip: break;
    }
  }
  return out;
}

std::vector<Mark> spine_signature(const Tiling& t, const Diamond& d) {
  std::map<Cell, Cell> partner;
  for (const auto& [a, b] : t) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<Mark> sig;
  for (const Cell c : d.spine()) {
    const auto it = partner.find(c);
    if (it == partner.end()) throw std::invalid_argument("spine_signature: spine cell not covered by the tiling");
    const Cell o = it->second;
    const bool west_or_north = (o.i == c.i - 1 && o.j == c.j) || (o.i == c.i && o.j == c.j + 1);
    const bool east_or_south = (o.i == c.i + 1 && o.j == c.j) || (o.i == c.i && o.j == c.j - 1);
    if (west_or_north)
      sig.push_back(Mark::Zig);
    else if (east_or_south)
      sig.push_back(Mark::Zag);
    else
      throw std::invalid_argument("spine_signature: domino cells are not adjacent");
  }
  return sig;
}

BalancedPartition partition_of_signature(const std::vector<Mark>& signature) {
  if (signature.size() % 2 != 0) throw std::invalid_argument("signature length must be even");
  std::vector<int> zigs;
  for (std::size_t p = 0; p < signature.size(); ++p) {
    if (signature[p] == Mark::Zip) throw std::invalid_argument("signature must not contain zips");
    if (signature[p] == Mark::Zig) zigs.push_back(static_cast<int>(p) + 1);
  }
  const int k = static_cast<int>(signature.size() / 2);
  if (static_cast<int>(zigs.size()) != k) throw std::invalid_argument("signature is not balanced");
  return BalancedPartition::from_zigs(k, std::move(zigs));
}

BigCount signature_class_size(const BalancedPartition& p, int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (p.k() != (n + 1) / 2) throw std::invalid_argument("partition size does not match ceil(n/2)");
  const unsigned long kf = static_cast<unsigned long>(n / 2);
  return weight(p.zigs()) * weight(p.zags()) * pow2(kf * (kf + 1));
}

}  // namespace aztec
