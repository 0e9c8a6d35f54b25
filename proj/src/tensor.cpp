#include "qhopf/tensor.hpp"

#include <stdexcept>

namespace qhopf {

Scalar MultTable::coefficient(int i, int j, int k) const {
  for (const auto& [kk, v] : product(i, j))
    if (kk == k) return v;
  return Scalar();
}

void MultTable::set(int i, int j, int k, const Scalar& v) {
  auto& list = products_[static_cast<std::size_t>(i) * dim_ + j];
  for (auto it = list.begin(); it != list.end(); ++it) {
    if (it->first == k) {
      if (v.is_zero()) {
        list.erase(it);
      } else {
        it->second = v;
      }
      return;
    }
  }
  if (v.is_zero()) return;
  auto pos = list.begin();
  while (pos != list.end() && pos->first < k) ++pos;
  list.insert(pos, {k, v});
}

namespace {
std::size_t ipow(int b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(b);
  return r;
}
void check_leg(const Tensor& t, int leg) {
  if (leg < 1 || leg > t.legs()) throw std::out_of_range("leg index out of range");
}
}  // namespace

Tensor::Tensor(int dim, int legs) : dim_(dim), legs_(legs) {
  if (legs < 1 || legs > kMaxLegs) throw std::invalid_argument("tensor legs must be in 1..4");
  c_.resize(ipow(dim, legs));
}

Tensor Tensor::unit(int dim, int legs) {
  Tensor t(dim, legs);
  t.c_[0] = 1;
  return t;
}

Tensor Tensor::basis(int dim, std::initializer_list<int> idx) {
  Tensor t(dim, static_cast<int>(idx.size()));
  t.at(idx) = 1;
  return t;
}

Tensor Tensor::from_vector(const std::vector<Scalar>& v) {
  Tensor t(static_cast<int>(v.size()), 1);
  t.c_ = v;
  return t;
}

std::size_t Tensor::flat(const Index& idx) const {
  std::size_t f = 0;
  for (int l = 0; l < legs_; ++l) f = f * dim_ + idx[l];
  return f;
}

Index Tensor::unflat(std::size_t f) const {
  Index idx{};
  for (int l = legs_ - 1; l >= 0; --l) {
    idx[l] = static_cast<int>(f % dim_);
    f /= dim_;
  }
  return idx;
}

Scalar& Tensor::at(std::initializer_list<int> idx) {
  if (static_cast<int>(idx.size()) != legs_) throw std::invalid_argument("index arity mismatch");
  Index i{};
  int l = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("basis index out of range");
    i[l++] = v;
  }
  return c_[flat(i)];
}

const Scalar& Tensor::at(std::initializer_list<int> idx) const { return const_cast<Tensor*>(this)->at(idx); }

bool Tensor::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

void Tensor::for_each_nonzero(const std::function<void(const Index&, const Scalar&)>& fn) const {
  for (std::size_t f = 0; f < c_.size(); ++f)
    if (!c_[f].is_zero()) fn(unflat(f), c_[f]);
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (o.dim_ != dim_ || o.legs_ != legs_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (o.dim_ != dim_ || o.legs_ != legs_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (auto& x : c_)
    if (!x.is_zero()) x *= s;
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) { return !first_difference(a, b); }

std::optional<Index> first_difference(const Tensor& a, const Tensor& b) {
  if (a.dim_ != b.dim_ || a.legs_ != b.legs_) return Index{-1, -1, -1, -1};
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.unflat(i);
  return std::nullopt;
}

Tensor mul(const MultTable& c, const Tensor& s, const Tensor& t) {
  if (s.legs() != t.legs() || s.dim() != t.dim() || s.dim() != c.dim())
    throw std::invalid_argument("tensor product: leg/dim mismatch");
  const int k = s.legs();
  Tensor out(s.dim(), k);
  std::vector<std::pair<Index, const Scalar*>> snz, tnz;
  for (std::size_t f = 0; f < s.size(); ++f)
    if (!s[f].is_zero()) snz.emplace_back(s.unflat(f), &s[f]);
  for (std::size_t f = 0; f < t.size(); ++f)
    if (!t[f].is_zero()) tnz.emplace_back(t.unflat(f), &t[f]);
  for (const auto& [si, sv] : snz) {
    for (const auto& [ti, tv] : tnz) {
      const Scalar base = *sv * *tv;
      std::array<const std::vector<std::pair<int, Scalar>>*, kMaxLegs> lists{};
      bool empty = false;
      for (int l = 0; l < k; ++l) {
        lists[l] = &c.product(si[l], ti[l]);
        if (lists[l]->empty()) empty = true;
      }
      if (empty) continue;
      // Cartesian expansion of the per-leg products.
      std::array<std::size_t, kMaxLegs> pos{};
      for (;;) {
        Scalar coef = base;
        std::size_t f = 0;
        for (int l = 0; l < k; ++l) {
          const auto& [kk, v] = (*lists[l])[pos[l]];
          if (!v.is_one()) coef *= v;
          f = f * s.dim() + kk;
        }
        out[f] += coef;
        int l = k - 1;
        while (l >= 0 && ++pos[l] == lists[l]->size()) pos[l--] = 0;
        if (l < 0) break;
      }
    }
  }
  return out;
}

Tensor mul(const MultTable& c, std::initializer_list<const Tensor*> factors) {
  auto it = factors.begin();
  Tensor acc = **it;
  for (++it; it != factors.end(); ++it) acc = mul(c, acc, **it);
  return acc;
}

Tensor leg_map(const Tensor& t, int leg, const ExactMatrix& f) {
  check_leg(t, leg);
  if (f.rows() != t.dim() || f.cols() != t.dim()) throw std::invalid_argument("leg map must be dim x dim");
  Tensor out(t.dim(), t.legs());
  const int l = leg - 1;
  t.for_each_nonzero([&](const Index& idx, const Scalar& v) {
    Index j = idx;
    for (int r = 0; r < t.dim(); ++r) {
      const Scalar& m = f(r, idx[l]);
      if (m.is_zero()) continue;
      j[l] = r;
      out[out.flat(j)].add_product(v, m);
    }
  });
  return out;
}

Tensor coproduct_leg(const Tensor& t, int leg, const CoproductTable& delta) {
  check_leg(t, leg);
  if (t.legs() == kMaxLegs) throw std::invalid_argument("coproduct would exceed four legs");
  Tensor out(t.dim(), t.legs() + 1);
  const int l = leg - 1;
  t.for_each_nonzero([&](const Index& idx, const Scalar& v) {
    delta[idx[l]].for_each_nonzero([&](const Index& d, const Scalar& w) {
      Index j{};
      for (int p = 0; p < l; ++p) j[p] = idx[p];
      j[l] = d[0];
      j[l + 1] = d[1];
      for (int p = l + 1; p < t.legs(); ++p) j[p + 1] = idx[p];
      out[out.flat(j)].add_product(v, w);
    });
  });
  return out;
}

Tensor counit_leg(const Tensor& t, int leg, const CounitTable& eps) {
  check_leg(t, leg);
  if (t.legs() == 1) throw std::invalid_argument("counit of a one-leg tensor is a scalar");
  Tensor out(t.dim(), t.legs() - 1);
  const int l = leg - 1;
  t.for_each_nonzero([&](const Index& idx, const Scalar& v) {
    if (eps[idx[l]].is_zero()) return;
    Index j{};
    for (int p = 0, q = 0; p < t.legs(); ++p)
      if (p != l) j[q++] = idx[p];
    out[out.flat(j)].add_product(v, eps[idx[l]]);
  });
  return out;
}

Tensor place(const Tensor& t, int target, const std::vector<int>& positions) {
  if (static_cast<int>(positions.size()) != t.legs() || target < t.legs() || target > kMaxLegs)
    throw std::invalid_argument("malformed leg positions");
  std::vector<bool> used(target + 1, false);
  for (int p : positions) {
    if (p < 1 || p > target || used[p]) throw std::invalid_argument("malformed leg positions");
    used[p] = true;
  }
  Tensor out(t.dim(), target);
  t.for_each_nonzero([&](const Index& idx, const Scalar& v) {
    Index j{};
    for (int l = 0; l < t.legs(); ++l) j[positions[l] - 1] = idx[l];
    out[out.flat(j)] = v;
  });
  return out;
}

Tensor permute(const Tensor& t, const std::vector<int>& sigma) { return place(t, t.legs(), sigma); }

Tensor subscript(const Tensor& t, const std::vector<int>& legs) {
  std::vector<int> pos(legs.size());
  for (std::size_t p = 0; p < legs.size(); ++p) {
    if (legs[p] < 1 || legs[p] > static_cast<int>(legs.size())) throw std::invalid_argument("malformed permutation");
    pos[legs[p] - 1] = static_cast<int>(p) + 1;
  }
  return permute(t, pos);
}

Tensor embed(const Tensor& t, int target, const std::vector<int>& positions) {
  for (std::size_t i = 1; i < positions.size(); ++i)
    if (positions[i] <= positions[i - 1]) throw std::invalid_argument("embed positions must be strictly increasing");
  return place(t, target, positions);
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Tensor out(a.dim(), a.legs() + b.legs());
  a.for_each_nonzero([&](const Index& i, const Scalar& x) {
    b.for_each_nonzero([&](const Index& j, const Scalar& y) {
      Index k{};
      for (int l = 0; l < a.legs(); ++l) k[l] = i[l];
      for (int l = 0; l < b.legs(); ++l) k[a.legs() + l] = j[l];
      out[out.flat(k)] = x * y;
    });
  });
  return out;
}

}  // namespace qhopf
