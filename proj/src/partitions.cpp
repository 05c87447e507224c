#include "pants/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pants/errors.hpp"

namespace pants {

CyclicPartition::CyclicPartition(std::vector<IndexSet> parts, int n) {
  if (n < 0 || n > 9) throw argument_error("ground size n out of range");
  IndexSet seen, full = IndexSet::full(n);
  for (IndexSet p : parts) {
    if (p.empty()) throw argument_error("empty part");
    if (!p.subset_of(full)) throw argument_error("part outside ground set");
    if (seen.intersects(p)) throw argument_error("overlapping parts");
    seen = seen | p;
  }
  if (seen != full) throw argument_error("parts do not cover the ground set");
  // canonical rotation: part containing 0 first
  std::size_t zero_at = 0;
  while (!parts[zero_at].contains(0)) ++zero_at;
  std::rotate(parts.begin(), parts.begin() + zero_at, parts.end());
  parts_ = std::move(parts);
  n_ = n;
}

int CyclicPartition::part_of(int i) const {
  if (i < 0 || i > n_) throw argument_error("element out of range");
  for (int s = 0; s < k(); ++s)
    if (parts_[s].contains(i)) return s;
  throw internal_error("uncovered element");  // unreachable by construction
}

std::string CyclicPartition::str() const {
  std::string out = "<";
  for (int s = 0; s < k(); ++s) {
    if (s) out += "|";
    out += parts_[s].str();
  }
  return out + ">";
}

std::string CyclicPartition::str_unicode() const {
  std::string out = "⟨";
  for (int s = 0; s < k(); ++s) {
    if (s) out += ",";
    if (parts_[s].size() > 1)
      out += "{" + parts_[s].str() + "}";
    else
      out += parts_[s].str();
  }
  return out + "⟩";
}

[[noreturn]] static void parse_failure(const std::string& text) {
  throw argument_error("bad partition literal '" + text + "'");
}

CyclicPartition CyclicPartition::parse(const std::string& text) {
  // Accepts "<01|2>" and the pretty form with angle brackets, commas and
  // optional braces.
  std::string body = text;
  if (body.size() >= 2 && body.front() == '<' && body.back() == '>')
    body = body.substr(1, body.size() - 2);
  else if (body.size() >= 6 && body.substr(0, 3) == "⟨" &&
           body.substr(body.size() - 3) == "⟩")
    body = body.substr(3, body.size() - 6);
  else
    parse_failure(text);

  std::vector<IndexSet> parts;
  std::string cur;
  auto flush = [&] {
    std::string digits;
    for (char c : cur)
      if (c != '{' && c != '}') digits += c;
    if (digits.empty()) parse_failure(text);
    parts.push_back(IndexSet::parse(digits));
    cur.clear();
  };
  for (char c : body) {
    if (c == '|' || c == ',')
      flush();
    else
      cur += c;
  }
  flush();

  int max_elem = -1;
  for (IndexSet p : parts)
    for (int e : p.elements()) max_elem = std::max(max_elem, e);
  return CyclicPartition(std::move(parts), max_elem);
}

void to_json(nlohmann::json& j, const CyclicPartition& p) {
  nlohmann::json parts = nlohmann::json::array();
  for (IndexSet s : p.parts()) parts.push_back(s.elements());
  j = nlohmann::json{{"parts", parts}, {"n", p.n()}};
}

std::vector<CyclicPartition> enumerate_cyclic_partitions(int n, const Config& cfg) {
  if (n < 0) throw argument_error("negative n");
  if (n > cfg.max_n) throw resource_error("n exceeds the partition guard");

  // Set partitions by restricted growth, then every ordering of the parts
  // not containing 0 (the 0-part is pinned first, which is exactly one
  // representative per rotation class).
  std::vector<CyclicPartition> out;
  std::vector<int> assign(n + 1, 0);
  auto emit = [&](int k) {
    std::vector<IndexSet> parts(k);
    for (int e = 0; e <= n; ++e) parts[assign[e]] = parts[assign[e]] | IndexSet::single(e);
    std::vector<IndexSet> rest(parts.begin() + 1, parts.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<IndexSet> arranged;
      arranged.push_back(parts[0]);
      arranged.insert(arranged.end(), rest.begin(), rest.end());
      out.emplace_back(std::move(arranged), n);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  auto rec = [&](auto&& self, int e, int used) -> void {
    if (e == n + 1) {
      emit(used);
      return;
    }
    for (int p = 0; p <= used; ++p) {
      assign[e] = p;
      self(self, e + 1, used + (p == used ? 1 : 0));
    }
  };
  rec(rec, 1, 1);  // element 0 always in part 0

  std::sort(out.begin(), out.end(), [](const CyclicPartition& a, const CyclicPartition& b) {
    if (a.k() != b.k()) return a.k() < b.k();
    return a.parts() < b.parts();
  });
  return out;
}

bool divides(const CyclicPartition& sigma, IndexSet J) {
  if (J.empty()) throw argument_error("divides: empty J");
  if (!J.subset_of(IndexSet::full(sigma.n()))) throw argument_error("divides: J outside ground set");
  int met = 0;
  for (IndexSet p : sigma.parts())
    if (p.intersects(J) && ++met >= 2) return true;
  return false;
}

Coarsening coarsen_with_map(const CyclicPartition& sigma, const std::vector<int>& V) {
  if (V.empty()) throw argument_error("coarsen: empty vertex set");
  std::vector<int> v(V);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  int k = sigma.k();
  if (v.front() < 0 || v.back() >= k) throw argument_error("coarsen: vertex out of range");

  int m = static_cast<int>(v.size());
  std::vector<IndexSet> parts(m);
  for (int j = 0; j < m; ++j) {
    // arcs from v[j] (inclusive) counterclockwise up to the next vertex
    int stop = v[(j + 1) % m];
    for (int s = v[j]; s != stop; s = (s + 1) % k) parts[j] = parts[j] | sigma.part(s);
    if (m == 1) {  // single retained vertex: the whole circle
      parts[j] = IndexSet::full(sigma.n());
    }
  }
  int zero_at = 0;
  while (!parts[zero_at].contains(0)) ++zero_at;
  std::vector<IndexSet> rotated;
  std::vector<int> vertex_of;
  for (int j = 0; j < m; ++j) {
    rotated.push_back(parts[(zero_at + j) % m]);
    vertex_of.push_back(v[(zero_at + j) % m]);
  }
  return Coarsening{CyclicPartition(std::move(rotated), sigma.n()), std::move(vertex_of)};
}

CyclicPartition coarsen(const CyclicPartition& sigma, const std::vector<int>& V) {
  return coarsen_with_map(sigma, V).partition;
}

std::vector<std::vector<int>> coarsening_vertex_sets(const CyclicPartition& tau,
                                                     const CyclicPartition& sigma) {
  std::vector<std::vector<int>> out;
  if (tau.n() != sigma.n()) return out;
  int k = sigma.k();
  if (tau.k() > k) return out;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    if (std::popcount(mask) != tau.k()) continue;
    std::vector<int> v;
    for (int s = 0; s < k; ++s)
      if ((mask >> s) & 1u) v.push_back(s);
    if (coarsen(sigma, v) == tau) out.push_back(std::move(v));
  }
  return out;
}

bool is_coarsening(const CyclicPartition& tau, const CyclicPartition& sigma) {
  if (tau.n() != sigma.n()) throw argument_error("is_coarsening: different ground sets");
  return !coarsening_vertex_sets(tau, sigma).empty();
}

std::vector<CyclicPartition> coarsenings(const CyclicPartition& sigma) {
  std::set<CyclicPartition> seen;
  int k = sigma.k();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> v;
    for (int s = 0; s < k; ++s)
      if ((mask >> s) & 1u) v.push_back(s);
    seen.insert(coarsen(sigma, v));
  }
  return std::vector<CyclicPartition>(seen.begin(), seen.end());
}

}  // namespace pants
