#include "coarsetr/homology/chains.hpp"

#include <algorithm>

#include "coarsetr/error.hpp"

namespace coarsetr::homology {

namespace {

// Smallest tuple in the orbit of t.
std::vector<Point> orbit_min(grp::GSet const& s, std::span<const Point> t) {
  std::vector<Point> best(t.begin(), t.end()), cur(t.size());
  for (grp::Element g = 0; g < s.group()->order(); ++g) {
    for (std::size_t i = 0; i < t.size(); ++i) cur[i] = s.act(g, t[i]);
    if (cur < best) best = cur;
  }
  return best;
}

// Calls f on every tuple of length len over `points`.
template <class F>
void for_each_tuple(std::vector<Point> const& points, std::size_t len, F&& f) {
  if (points.empty()) return;
  std::vector<std::size_t> idx(len, 0);
  std::vector<Point> t(len, points[0]);
  while (true) {
    f(std::span<const Point>(t));
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++idx[k] < points.size()) {
        t[k] = points[idx[k]];
        break;
      }
      idx[k] = 0;
      t[k] = points[0];
      if (k == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace

ChainBasis::ChainBasis(Space const& x, std::size_t degree)
    : carrier_(x.carrier()), degree_(degree) {
  std::size_t len = degree + 1;
  std::uint64_t base = std::max<std::uint64_t>(x.size(), 1), cap = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (__builtin_mul_overflow(cap, base, &cap))
      throw OutOfScopeError("chain basis in degree " + std::to_string(degree) +
                            " is too large for a carrier of " +
                            std::to_string(x.size()) + " points");
  }

  // Orbits of components.
  auto const& comps = x.components();
  std::vector<std::int64_t> comp_block(comps.blocks, -1);
  for (std::uint32_t c = 0; c < comps.blocks; ++c) {
    if (comp_block[c] != -1) continue;
    for (grp::Element g = 0; g < x.group()->order(); ++g)
      comp_block[x.translate_component(g, c)] =
          static_cast<std::int64_t>(block_count_);
    ++block_count_;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> code_to_rep;
  std::vector<std::uint64_t> rep_codes;
  for (auto const& members : comps.members()) {
    for_each_tuple(members, len, [&](std::span<const Point> t) {
      auto r = orbit_min(carrier_, t);
      std::uint64_t rc = encode(r);
      code_to_rep.emplace_back(encode(t), rc);
      if (rc == encode(t)) rep_codes.push_back(rc);
    });
  }
  std::sort(rep_codes.begin(), rep_codes.end());
  rep_codes.erase(std::unique(rep_codes.begin(), rep_codes.end()),
                  rep_codes.end());
  index_.reserve(code_to_rep.size());
  for (auto [tc, rc] : code_to_rep)
    index_.emplace(tc, static_cast<std::uint32_t>(
                           std::lower_bound(rep_codes.begin(), rep_codes.end(),
                                            rc) -
                           rep_codes.begin()));

  reps_.resize(rep_codes.size() * len);
  block_.resize(rep_codes.size());
  orbit_size_.assign(rep_codes.size(), 0);
  for (std::size_t i = 0; i < rep_codes.size(); ++i) {
    std::uint64_t c = rep_codes[i];
    for (std::size_t k = len; k-- > 0;) {
      reps_[i * len + k] = static_cast<Point>(c % base);
      c /= base;
    }
    block_[i] = static_cast<std::uint32_t>(
        comp_block[comps.label[reps_[i * len]]]);
  }
  for (auto const& [tc, idx] : index_) ++orbit_size_[idx];
}

std::uint64_t ChainBasis::encode(std::span<const Point> t) const {
  std::uint64_t base = std::max<std::uint64_t>(carrier_.size(), 1), c = 0;
  for (Point p : t) c = c * base + p;
  return c;
}

std::optional<std::uint32_t> ChainBasis::orbit_of(
    std::span<const Point> t) const {
  if (t.size() != degree_ + 1) return std::nullopt;
  for (Point p : t)
    if (p >= carrier_.size()) return std::nullopt;
  auto it = index_.find(encode(t));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<Point>> ChainBasis::orbit(std::size_t i) const {
  auto r = rep(i);
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur(r.size());
  for (grp::Element g = 0; g < carrier_.group()->order(); ++g) {
    for (std::size_t k = 0; k < r.size(); ++k) cur[k] = carrier_.act(g, r[k]);
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SparseMatrix boundary_matrix(ChainBasis const& from, ChainBasis const& to) {
  if (from.degree() != to.degree() + 1)
    throw InternalError("boundary between non-adjacent degrees");
  std::size_t n = from.degree();
  SparseMatrix d(to.size(), from.size());
  std::vector<Point> face(n);
  for (std::size_t j = 0; j < from.size(); ++j) {
    for (auto const& t : from.orbit(j)) {
      for (std::size_t i = 0; i <= n; ++i) {
        std::size_t k = 0;
        for (std::size_t s = 0; s <= n; ++s)
          if (s != i) face[k++] = t[s];
        auto idx = to.orbit_of(face);
        if (!idx) throw InternalError("face of a controlled tuple escaped");
        // The value of the invariant face sum at the orbit representative.
        auto r = to.rep(*idx);
        if (std::equal(r.begin(), r.end(), face.begin()))
          d.add(*idx, j, i % 2 == 0 ? 1 : -1);
      }
    }
  }
  d.normalize();
  return d;
}

ChainComplexModel::ChainComplexModel(Space x, std::size_t top)
    : space_(std::move(x)) {
  for (std::size_t n = 0; n <= top; ++n) bases_.emplace_back(space_, n);
  boundaries_.emplace_back(0, bases_[0].size());
  for (std::size_t n = 1; n <= top; ++n)
    boundaries_.push_back(boundary_matrix(bases_[n], bases_[n - 1]));
}

SparseMatrix pushforward(Map const& f, ChainBasis const& src,
                         ChainBasis const& dst) {
  if (src.degree() != dst.degree())
    throw InternalError("pushforward between different degrees");
  SparseMatrix m(dst.size(), src.size());
  std::vector<Point> img(src.degree() + 1);
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (auto const& t : src.orbit(j)) {
      for (std::size_t k = 0; k < t.size(); ++k) img[k] = f.at(t[k]);
      auto idx = dst.orbit_of(img);
      if (!idx)
        throw ValidationError("pushforward along a map that is not controlled");
      auto r = dst.rep(*idx);
      if (std::equal(r.begin(), r.end(), img.begin())) m.add(*idx, j, 1);
    }
  }
  m.normalize();
  return m;
}

SparseMatrix transfer(Map const& w, ChainBasis const& src_of_w,
                      ChainBasis const& dst_of_w) {
  if (src_of_w.degree() != dst_of_w.degree())
    throw InternalError("transfer between different degrees");
  SparseMatrix m(src_of_w.size(), dst_of_w.size());
  std::vector<Point> img(src_of_w.degree() + 1);
  for (std::size_t i = 0; i < src_of_w.size(); ++i) {
    auto t = src_of_w.rep(i);
    for (std::size_t k = 0; k < t.size(); ++k) img[k] = w.at(t[k]);
    auto idx = dst_of_w.orbit_of(img);
    if (!idx)
      throw ValidationError("transfer along a map that is not controlled");
    m.add(static_cast<std::uint32_t>(i), *idx, 1);
  }
  m.normalize();
  return m;
}

std::int64_t evaluate(ChainBasis const& b, std::vector<std::int64_t> const& c,
                      std::span<const Point> t) {
  auto idx = b.orbit_of(t);
  return idx ? c.at(*idx) : 0;
}

}  // namespace coarsetr::homology
