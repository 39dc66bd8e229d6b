// Point counts of wonderful models of prefix building sets, summed over strata.
//
// A stratum is a laminar subfamily S of the building set. Each member of S, and the root,
// is a component whose children are the maximal members below it plus the uncovered
// marks. Children may share a position unless the union of such a group contains a member
// of the building set that is not already inside one child. The dominant transform of a
// locus delta_J consists of the points where, in the smallest component containing J, all
// children meeting J share one position.

#include "tdn/engine.hpp"

#include <algorithm>
#include <map>

namespace tdn {

namespace {

Poly root_configurations(const Ambient& amb, int k) {
  switch (amb.kind) {
    case AmbientKind::TSpace:
      return affine_configurations(amb.d, k);
    case AmbientKind::PSpace: {
      // k distinct points of the quotient chart: Moebius inversion over coincidence patterns,
      // each coordinate row of j distinct values contributing a point of P^{j-2}
      if (k < 2) return Poly();
      // signed Stirling numbers of the first kind s(k, j)
      std::vector<std::vector<std::int64_t>> s(static_cast<std::size_t>(k) + 1,
                                               std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 0));
      s[0][0] = 1;
      for (int a = 1; a <= k; ++a)
        for (int j = 1; j <= a; ++j)
          s[a][j] = s[a - 1][j - 1] - (a - 1) * s[a - 1][j];
      Poly out;
      for (int j = 1; j <= k; ++j) out += Poly::constant(s[k][j]) * Poly::qint(j - 1).pow(amb.d);
      return out;
    }
    case AmbientKind::FMSpace: {
      if (k < 1) return Poly();
      Poly out = Poly::constant(1);
      Poly pts = Poly::qint(amb.d + 1);
      for (int i = 0; i < k; ++i) out *= pts - Poly::constant(i);
      return out;
    }
  }
  return Poly();
}

class StrataCounter {
 public:
  StrataCounter(const Ambient& amb, const std::vector<IndexSet>& family)
      : amb_(amb), family_(family), universe_(amb.universe()) {}

  Poly count(std::optional<IndexSet> dominant) {
    dominant_ = dominant;
    total_ = Poly();
    std::vector<IndexSet> chosen;
    walk(0, chosen);
    return total_;
  }

 private:
  void walk(std::size_t idx, std::vector<IndexSet>& chosen) {
    if (idx == family_.size()) {
      total_ += stratum(chosen);
      return;
    }
    walk(idx + 1, chosen);
    IndexSet s = family_[idx];
    for (IndexSet c : chosen)
      if (overlaps(c, s)) return;
    chosen.push_back(s);
    walk(idx + 1, chosen);
    chosen.pop_back();
  }

  std::vector<IndexSet> children(IndexSet v, bool is_root, const std::vector<IndexSet>& chosen) const {
    std::vector<IndexSet> out;
    IndexSet covered = 0;
    for (IndexSet w : chosen) {
      bool below = is_root ? subset_of(w, v) : proper_subset_of(w, v);
      if (!below) continue;
      bool maximal = true;
      for (IndexSet x : chosen) {
        bool x_below = is_root ? subset_of(x, v) : proper_subset_of(x, v);
        if (x_below && proper_subset_of(w, x)) maximal = false;
      }
      if (maximal) {
        out.push_back(w);
        covered |= w;
      }
    }
    for (int m : labels(v & ~covered)) out.push_back(singleton(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  Poly stratum(const std::vector<IndexSet>& chosen) {
    // component that must hold the dominant constraint: smallest member containing J
    IndexSet target = 0;
    bool target_root = true;
    if (dominant_) {
      for (IndexSet v : chosen) {
        if (subset_of(*dominant_, v) && (target_root || size_of(v) < size_of(target))) {
          target = v;
          target_root = false;
        }
      }
    }
    Poly prod = component(children(universe_, true, chosen), true,
                          dominant_ && target_root ? *dominant_ : 0);
    for (IndexSet v : chosen) {
      if (prod.is_zero()) break;
      IndexSet forced = (dominant_ && !target_root && v == target) ? *dominant_ : 0;
      prod *= component(children(v, false, chosen), false, forced);
    }
    return prod;
  }

  bool group_allowed(IndexSet group_union, const std::vector<IndexSet>& members) const {
    for (IndexSet k : family_) {
      if (!subset_of(k, group_union)) continue;
      bool inside_one = false;
      for (IndexSet c : members)
        if (subset_of(k, c)) inside_one = true;
      if (!inside_one) return false;
    }
    return true;
  }

  Poly component(const std::vector<IndexSet>& kids, bool is_root, IndexSet forced) {
    auto key = std::make_tuple(kids, is_root, forced);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const std::size_t c = kids.size();
    std::vector<int> rgs(c, 0);  // restricted growth string labelling groups
    Poly result;
    std::vector<std::int64_t> tally(c + 1, 0);
    while (true) {
      int groups = *std::max_element(rgs.begin(), rgs.end()) + 1;
      bool ok = true;
      for (int g = 0; g < groups && ok; ++g) {
        std::vector<IndexSet> members;
        IndexSet u = 0;
        for (std::size_t i = 0; i < c; ++i)
          if (rgs[i] == g) {
            members.push_back(kids[i]);
            u |= kids[i];
          }
        if (members.size() >= 2 && !group_allowed(u, members)) ok = false;
      }
      if (ok && forced) {
        int g_forced = -1;
        for (std::size_t i = 0; i < c && ok; ++i) {
          if ((kids[i] & forced) == 0) continue;
          if (g_forced < 0) g_forced = rgs[i];
          else if (g_forced != rgs[i]) ok = false;
        }
      }
      if (ok) ++tally[static_cast<std::size_t>(groups)];
      // next restricted growth string
      std::size_t i = c;
      while (i-- > 1) {
        int mx = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
        if (rgs[i] <= mx) {
          ++rgs[i];
          std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
          break;
        }
      }
      if (i == 0 || c <= 1) break;
    }
    for (std::size_t k = 1; k <= c; ++k) {
      if (tally[k] == 0) continue;
      Poly per = is_root ? root_configurations(amb_, static_cast<int>(k))
                         : affine_configurations(amb_.d, static_cast<int>(k));
      result += Poly::constant(tally[k]) * per;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  Ambient amb_;
  std::vector<IndexSet> family_;
  IndexSet universe_;
  std::optional<IndexSet> dominant_;
  Poly total_;
  std::map<std::tuple<std::vector<IndexSet>, bool, IndexSet>, Poly> memo_;
};

}  // namespace

Poly stratum_count(const Ambient& ambient, const std::vector<IndexSet>& family,
                   std::optional<IndexSet> dominant) {
  StrataCounter counter(ambient, family);
  return counter.count(dominant);
}

}  // namespace tdn
