#include "pants/indexset.hpp"

namespace pants {

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSet::str() const {
  std::string out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out += static_cast<char>('0' + i);
  return out;
}

IndexSet IndexSet::parse(const std::string& digits) {
  IndexSet s;
  for (char c : digits) {
    if (c < '0' || c > '9') throw argument_error("bad index digit in '" + digits + "'");
    s.bits |= 1u << (c - '0');
  }
  return s;
}

std::vector<IndexSet> nonempty_subsets(IndexSet universe) {
  std::vector<IndexSet> out;
  // classic subset walk of a sparse mask, ascending as integers
  std::uint32_t u = universe.bits, s = 0;
  do {
    s = (s - u) & u;
    if (s) out.push_back(IndexSet(s));
  } while (s);
  return out;
}

}  // namespace pants
