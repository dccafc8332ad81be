#include "icx/analysis/sequences.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "icx/bounds.hpp"
#include "icx/errors.hpp"

namespace icx {
namespace {

unsigned contiguous_reliable(const std::map<unsigned, SequenceEntry>& seq, unsigned first) {
  unsigned last = 0;
  unsigned expect = first;
  for (const auto& [k, entry] : seq) {
    if (k != expect || !entry.reliable) break;
    last = k;
    ++expect;
  }
  return last;
}

}  // namespace

unsigned SequenceSet::e_reliable_max() const { return contiguous_reliable(e, 1); }
unsigned SequenceSet::E_reliable_max() const { return contiguous_reliable(E_emp, 1); }
unsigned SequenceSet::r_reliable_max() const { return contiguous_reliable(r, 0); }

SequenceSet derive_sequences(const ComplexityTable& table) {
  return derive_sequences(table, table.has_ranks());
}

SequenceSet derive_sequences(const ComplexityTable& table, bool want_rank) {
  if (want_rank && !table.has_ranks()) throw CapabilityError("table carries no rank column");
  SequenceSet seq;
  seq.limit = table.limit();
  seq.source = table.tag();
  seq.has_rank = want_rank;

  const auto f = table.complexities();
  const auto rank = table.ranks();
  const std::uint64_t limit = table.limit();

  // Two largest values per exact complexity, then running top-two over ≤ k.
  std::array<std::array<std::uint64_t, 2>, 256> top{};
  unsigned max_c = 0;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const unsigned c = f[m];
    max_c = std::max(max_c, c);
    if (!seq.e.count(c)) seq.e[c] = {m, false};
    top[c][1] = top[c][0];
    top[c][0] = m;
    if (want_rank && !seq.r.count(rank[m])) seq.r[rank[m]] = {m, true};
  }

  // e(k) found in the table is exact; keep the contiguous run from k = 1 as reliable.
  unsigned expect = 1;
  for (auto& [k, entry] : seq.e) {
    if (k != expect) break;
    entry.reliable = true;
    ++expect;
  }

  // No m > limit has ‖m‖ < lb(limit + 1), so E and E2 are exact below that.
  const unsigned horizon = complexity_lower_bound(limit + 1);
  std::uint64_t best = 0;
  std::uint64_t second = 0;
  for (unsigned k = 1; k <= max_c; ++k) {
    for (const std::uint64_t m : top[k]) {
      if (m > best) {
        second = best;
        best = m;
      } else if (m > second) {
        second = m;
      }
    }
    if (best != 0) seq.E_emp[k] = {best, k < horizon};
    if (second != 0) seq.E2_emp[k] = {second, k < horizon};
  }
  return seq;
}

}  // namespace icx
