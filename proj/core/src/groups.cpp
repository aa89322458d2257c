#include "hrg/groups.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

#include "hrg/errors.hpp"

namespace hrg {

GroupOps::~GroupOps() = default;

namespace {

int positive_mod(std::int64_t x, std::int64_t m) {
  return static_cast<int>(((x % m) + m) % m);
}

std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::int64_t>::max() / b) return std::nullopt;
  return a * b;
}

void put16(GroupElem* out, int value) {
  out->push_back(static_cast<char>(value & 0xff));
  out->push_back(static_cast<char>((value >> 8) & 0xff));
}

int get16(const GroupElem& e, std::size_t pos) {
  return static_cast<int>(static_cast<unsigned char>(e[pos])) |
         (static_cast<int>(static_cast<unsigned char>(e[pos + 1])) << 8);
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// --------------------------------------------------- affine permutations --

// Window of the i-th adjacent transposition; index 0 swaps across the
// window boundary (images of 1 and m move by one strand block).
std::vector<int> transposition_window(int m, int modulus, int i) {
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) w[static_cast<std::size_t>(p - 1)] = p;
  if (i == 0) {
    w[0] = 0;
    w[static_cast<std::size_t>(m - 1)] = m + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)],
              w[static_cast<std::size_t>(i)]);
  }
  for (auto& v : w) v = positive_mod(v, modulus);
  return w;
}

class AffineOps final : public GroupOps {
 public:
  AffineOps(int m, int k) : m_(m), modulus_(m * k) {}

  int strands() const { return m_; }
  int modulus() const { return modulus_; }

  std::size_t encoded_size() const override {
    return 2 * static_cast<std::size_t>(m_);
  }

  GroupElem encode(const std::vector<int>& window) const {
    GroupElem e;
    e.reserve(encoded_size());
    for (const int v : window) put16(&e, v);
    return e;
  }

  std::vector<int> window_of(const GroupElem& e) const {
    std::vector<int> w(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i)
      w[static_cast<std::size_t>(i)] = get16(e, 2 * static_cast<std::size_t>(i));
    return w;
  }

  GroupElem identity() const override {
    std::vector<int> w(static_cast<std::size_t>(m_));
    for (int p = 1; p <= m_; ++p)
      w[static_cast<std::size_t>(p - 1)] = p % modulus_;
    return encode(w);
  }

  // Value of the permutation at any point of Z_modulus, via the defining
  // shift rule: write x = r + a*m with r in 1..m, then u(x) = u(r) + a*m.
  int apply(const GroupElem& u, int x) const {
    int r = x % m_;
    if (r == 0) r = m_;
    const int a = (x - r) / m_;
    const int ur = get16(u, 2 * static_cast<std::size_t>(r - 1));
    return positive_mod(ur + static_cast<std::int64_t>(a) * m_, modulus_);
  }

  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override {
    std::vector<int> w(static_cast<std::size_t>(m_));
    for (int p = 1; p <= m_; ++p)
      w[static_cast<std::size_t>(p - 1)] =
          apply(a, get16(b, 2 * static_cast<std::size_t>(p - 1)));
    return encode(w);
  }

  GroupElem inverse(const GroupElem& u) const override {
    std::vector<int> w(static_cast<std::size_t>(m_));
    for (int p = 1; p <= m_; ++p) {
      const int y = get16(u, 2 * static_cast<std::size_t>(p - 1));
      int r = y % m_;
      if (r == 0) r = m_;
      const int a = (y - r) / m_;
      w[static_cast<std::size_t>(r - 1)] =
          positive_mod(p - static_cast<std::int64_t>(a) * m_, modulus_);
    }
    return encode(w);
  }

  std::string describe(const GroupElem& e) const override {
    std::string s = "[";
    for (int i = 0; i < m_; ++i) {
      if (i) s += ',';
      s += std::to_string(get16(e, 2 * static_cast<std::size_t>(i)));
    }
    return s + "]";
  }

 private:
  int m_;
  int modulus_;
};

// ------------------------------------------- truncated polynomial matrices --

class RingMatrixOps final : public GroupOps {
 public:
  RingMatrixOps(int m, std::int64_t q, int s) : m_(m), q_(q), s_(s) {}

  int size() const { return m_; }
  std::int64_t q() const { return q_; }
  int s() const { return s_; }

  std::size_t encoded_size() const override {
    return static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_) *
           static_cast<std::size_t>(s_);
  }

  using Poly = std::vector<int>;  // s_ coefficients, constant term first
  using Mat = std::vector<Poly>;  // m_ * m_ entries, row-major

  Mat decode(const GroupElem& e) const {
    Mat mat(static_cast<std::size_t>(m_) * m_, Poly(static_cast<std::size_t>(s_)));
    std::size_t pos = 0;
    for (auto& p : mat)
      for (auto& c : p) c = static_cast<unsigned char>(e[pos++]);
    return mat;
  }

  GroupElem encode(const Mat& mat) const {
    GroupElem e;
    e.reserve(encoded_size());
    for (const auto& p : mat)
      for (const int c : p) e.push_back(static_cast<char>(c));
    return e;
  }

  Poly pmul(const Poly& a, const Poly& b) const {
    Poly c(static_cast<std::size_t>(s_), 0);
    for (int d1 = 0; d1 < s_; ++d1) {
      const int av = a[static_cast<std::size_t>(d1)];
      if (!av) continue;
      for (int d2 = 0; d2 + d1 < s_; ++d2) {
        auto& slot = c[static_cast<std::size_t>(d1 + d2)];
        slot = static_cast<int>(
            (slot + static_cast<std::int64_t>(av) *
                        b[static_cast<std::size_t>(d2)]) %
            q_);
      }
    }
    return c;
  }

  int field_inverse(int c) const {
    // Fermat: c^(q-2) mod q.
    std::int64_t result = 1;
    std::int64_t base = c % q_;
    std::int64_t e = q_ - 2;
    while (e) {
      if (e & 1) result = result * base % q_;
      base = base * base % q_;
      e >>= 1;
    }
    return static_cast<int>(result);
  }

  // Inverse of a unit (nonzero constant term), solving (u*v)=1 coefficient
  // by coefficient.
  Poly punit_inverse(const Poly& u) const {
    Poly v(static_cast<std::size_t>(s_), 0);
    const int inv0 = field_inverse(u[0]);
    v[0] = inv0;
    for (int d = 1; d < s_; ++d) {
      std::int64_t acc = 0;
      for (int e = 1; e <= d; ++e)
        acc += static_cast<std::int64_t>(u[static_cast<std::size_t>(e)]) *
               v[static_cast<std::size_t>(d - e)];
      v[static_cast<std::size_t>(d)] =
          positive_mod(-acc % q_ * inv0, q_);
    }
    return v;
  }

  GroupElem identity() const override {
    Mat mat(static_cast<std::size_t>(m_) * m_, Poly(static_cast<std::size_t>(s_), 0));
    for (int i = 0; i < m_; ++i) mat[static_cast<std::size_t>(i * m_ + i)][0] = 1;
    return encode(mat);
  }

  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override {
    // Hot path (group closures do millions of these): work on the raw byte
    // encodings.  Entry (i, j) coefficient d sits at byte (i*m + j)*s + d.
    GroupElem out(encoded_size(), '\0');
    const auto* pa = reinterpret_cast<const unsigned char*>(a.data());
    const auto* pb = reinterpret_cast<const unsigned char*>(b.data());
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        const std::size_t base = static_cast<std::size_t>((i * m_ + j) * s_);
        for (int d = 0; d < s_; ++d) {
          std::int64_t acc = 0;
          for (int l = 0; l < m_; ++l) {
            const std::size_t ra = static_cast<std::size_t>((i * m_ + l) * s_);
            const std::size_t rb = static_cast<std::size_t>((l * m_ + j) * s_);
            for (int d1 = 0; d1 <= d; ++d1)
              acc += static_cast<std::int64_t>(pa[ra + static_cast<std::size_t>(d1)]) *
                     pb[rb + static_cast<std::size_t>(d - d1)];
          }
          out[base + static_cast<std::size_t>(d)] =
              static_cast<char>(acc % q_);
        }
      }
    return out;
  }

  GroupElem inverse(const GroupElem& a) const override {
    // Gauss-Jordan over the local ring: a pivot must be a unit (nonzero
    // constant coefficient); one always exists for invertible matrices.
    Mat A = decode(a);
    Mat I = decode(identity());
    auto row_op = [&](Mat& mat, int row, int col) -> Poly& {
      return mat[static_cast<std::size_t>(row * m_ + col)];
    };
    for (int col = 0; col < m_; ++col) {
      int piv = -1;
      for (int row = col; row < m_; ++row)
        if (row_op(A, row, col)[0] != 0) {
          piv = row;
          break;
        }
      if (piv < 0)
        throw InvalidParamsError("matrix has no unit pivot; not invertible");
      if (piv != col)
        for (int j = 0; j < m_; ++j) {
          std::swap(row_op(A, piv, j), row_op(A, col, j));
          std::swap(row_op(I, piv, j), row_op(I, col, j));
        }
      const Poly scale = punit_inverse(row_op(A, col, col));
      for (int j = 0; j < m_; ++j) {
        row_op(A, col, j) = pmul(scale, row_op(A, col, j));
        row_op(I, col, j) = pmul(scale, row_op(I, col, j));
      }
      for (int row = 0; row < m_; ++row) {
        if (row == col) continue;
        const Poly f = row_op(A, row, col);
        bool zero = true;
        for (const int c : f)
          if (c) {
            zero = false;
            break;
          }
        if (zero) continue;
        for (int j = 0; j < m_; ++j) {
          const Poly fa = pmul(f, row_op(A, col, j));
          const Poly fi = pmul(f, row_op(I, col, j));
          Poly& ta = row_op(A, row, j);
          Poly& ti = row_op(I, row, j);
          for (int d = 0; d < s_; ++d) {
            ta[static_cast<std::size_t>(d)] = positive_mod(
                ta[static_cast<std::size_t>(d)] - fa[static_cast<std::size_t>(d)], q_);
            ti[static_cast<std::size_t>(d)] = positive_mod(
                ti[static_cast<std::size_t>(d)] - fi[static_cast<std::size_t>(d)], q_);
          }
        }
      }
    }
    return encode(I);
  }

  std::string describe(const GroupElem& e) const override {
    const Mat mat = decode(e);
    std::string out = "[";
    for (int i = 0; i < m_; ++i) {
      if (i) out += "; ";
      for (int j = 0; j < m_; ++j) {
        if (j) out += ',';
        const Poly& p = mat[static_cast<std::size_t>(i * m_ + j)];
        std::string entry;
        for (int d = 0; d < s_; ++d) {
          const int c = p[static_cast<std::size_t>(d)];
          if (!c) continue;
          if (!entry.empty()) entry += '+';
          if (c != 1 || d == 0) entry += std::to_string(c);
          if (d >= 1) entry += 't';
          if (d >= 2) entry += '^' + std::to_string(d);
        }
        out += entry.empty() ? "0" : entry;
      }
    }
    return out + "]";
  }

 private:
  int m_;
  std::int64_t q_;
  int s_;
};

// ---------------------------------------------------------------- product --

class ProductOps final : public GroupOps {
 public:
  ProductOps(std::shared_ptr<const GroupOps> a, std::shared_ptr<const GroupOps> b)
      : a_(std::move(a)), b_(std::move(b)), la_(a_->encoded_size()) {}

  std::size_t encoded_size() const override {
    return la_ + b_->encoded_size();
  }

  GroupElem identity() const override { return a_->identity() + b_->identity(); }

  GroupElem multiply(const GroupElem& x, const GroupElem& y) const override {
    return a_->multiply(x.substr(0, la_), y.substr(0, la_)) +
           b_->multiply(x.substr(la_), y.substr(la_));
  }

  GroupElem inverse(const GroupElem& x) const override {
    return a_->inverse(x.substr(0, la_)) + b_->inverse(x.substr(la_));
  }

  std::string describe(const GroupElem& x) const override {
    return "(" + a_->describe(x.substr(0, la_)) + " | " +
           b_->describe(x.substr(la_)) + ")";
  }

 private:
  std::shared_ptr<const GroupOps> a_;
  std::shared_ptr<const GroupOps> b_;
  std::size_t la_;
};

const AffineOps& affine_ops_of(const FiniteGroupHandle& g) {
  if (g.family != GroupFamily::kAffineWindows || !g.ops)
    throw UnsupportedFamilyError("handle is not an affine-window group");
  return static_cast<const AffineOps&>(*g.ops);
}

const RingMatrixOps& matrix_ops_of(const FiniteGroupHandle& g) {
  if (g.family != GroupFamily::kTruncatedElementary || !g.ops)
    throw UnsupportedFamilyError("handle is not an elementary-matrix group");
  return static_cast<const RingMatrixOps&>(*g.ops);
}

}  // namespace

FiniteGroupHandle affine_group(int m, int k) {
  if (m < 2) throw InvalidParamsError("affine group needs at least 2 strands");
  if (k < 1) throw InvalidParamsError("affine group needs k >= 1");
  if (static_cast<std::int64_t>(m) * k > 0xffff)
    throw CapacityError("affine window modulus exceeds the 16-bit encoding");
  auto ops = std::make_shared<AffineOps>(m, k);
  FiniteGroupHandle g;
  g.family = GroupFamily::kAffineWindows;
  g.params = {m, k};
  g.generators.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    g.generators.push_back(ops->encode(transposition_window(m, m * k, i)));
  std::optional<std::int64_t> order = 1;
  for (int i = 0; i + 1 < m && order; ++i) order = checked_mul(*order, k);
  for (int i = 2; i <= m && order; ++i) order = checked_mul(*order, i);
  g.known_order = order;
  g.ops = std::move(ops);
  return g;
}

FiniteGroupHandle el_group(int m, std::int64_t q, int s) {
  if (m < 3) throw InvalidParamsError("elementary matrix group needs m >= 3");
  if (s < 1) throw InvalidParamsError("truncation order must be >= 1");
  if (!is_prime(q))
    throw InvalidParamsError("coefficient modulus must be prime");
  if (q > 251) throw CapacityError("coefficient modulus exceeds byte encoding");
  auto ops = std::make_shared<RingMatrixOps>(m, q, s);
  FiniteGroupHandle g;
  g.family = GroupFamily::kTruncatedElementary;
  g.params = {m, q, s};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int e = 0; e < s; ++e)
        for (int c = 1; c < q; ++c) {
          auto mat = ops->decode(ops->identity());
          mat[static_cast<std::size_t>(i * m + j)][static_cast<std::size_t>(e)] = c;
          g.generators.push_back(ops->encode(mat));
        }
    }
  // Order of the special linear group over the residue field, scaled by the
  // kernel of reduction: q^((m^2-1)(s-1)).
  std::optional<std::int64_t> order = 1;
  for (int i = 0; i < m * (m - 1) / 2 && order; ++i) order = checked_mul(*order, q);
  for (int i = 2; i <= m && order; ++i) {
    std::optional<std::int64_t> qi = 1;
    for (int e = 0; e < i && qi; ++e) qi = checked_mul(*qi, q);
    if (!qi) {
      order = std::nullopt;
      break;
    }
    order = checked_mul(*order, *qi - 1);
  }
  for (int i = 0; i < (m * m - 1) * (s - 1) && order; ++i)
    order = checked_mul(*order, q);
  g.known_order = order;
  g.ops = std::move(ops);
  return g;
}

GroupElem affine_gen(const FiniteGroupHandle& g, int i) {
  const auto& ops = affine_ops_of(g);
  if (i < 0 || i >= ops.strands())
    throw InvalidParamsError("generator index out of range");
  return g.generators[static_cast<std::size_t>(i)];
}

GroupElem elementary_gen(const FiniteGroupHandle& g, int i, int j,
                         const std::vector<int>& r) {
  const auto& ops = matrix_ops_of(g);
  const int m = ops.size();
  if (i < 0 || i >= m || j < 0 || j >= m || i == j)
    throw InvalidParamsError("elementary position must be off-diagonal");
  if (static_cast<int>(r.size()) > ops.s())
    throw InvalidParamsError("coefficient vector longer than the truncation");
  auto mat = ops.decode(ops.identity());
  for (std::size_t d = 0; d < r.size(); ++d) {
    if (r[d] < 0 || r[d] >= ops.q())
      throw InvalidParamsError("coefficient outside the field");
    mat[static_cast<std::size_t>(i * m + j)][d] = r[d];
  }
  return ops.encode(mat);
}

AffinePerm decode_affine(const FiniteGroupHandle& g, const GroupElem& e) {
  const auto& ops = affine_ops_of(g);
  if (e.size() != ops.encoded_size())
    throw InvalidParamsError("element encoding has the wrong length");
  return AffinePerm{ops.window_of(e), ops.modulus()};
}

GroupElem encode_affine(const FiniteGroupHandle& g, const AffinePerm& p) {
  const auto& ops = affine_ops_of(g);
  const int m = ops.strands();
  const int modulus = ops.modulus();
  if (p.modulus != modulus)
    throw InvalidParamsError("window modulus does not match the group");
  if (static_cast<int>(p.window.size()) != m)
    throw InvalidParamsError("window has the wrong length");
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::int64_t sum = 0;
  for (const int v : p.window) {
    if (v < 0 || v >= modulus)
      throw InvalidParamsError("window entry outside [0, modulus)");
    auto& slot = seen[static_cast<std::size_t>(v % m)];
    if (slot)
      throw InvalidParamsError("window entries collide modulo the strand count");
    slot = 1;
    sum += v;
  }
  const std::int64_t want = static_cast<std::int64_t>(m) * (m + 1) / 2;
  if (positive_mod(sum, modulus) != positive_mod(want, modulus))
    throw InvalidParamsError("window sum is off the group's translation class");
  return ops.encode(p.window);
}

RingMatrix decode_matrix(const FiniteGroupHandle& g, const GroupElem& e) {
  const auto& ops = matrix_ops_of(g);
  if (e.size() != ops.encoded_size())
    throw InvalidParamsError("element encoding has the wrong length");
  const auto flat = ops.decode(e);
  const int m = ops.size();
  RingMatrix mat;
  mat.q = ops.q();
  mat.s = ops.s();
  mat.entries.assign(static_cast<std::size_t>(m),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mat.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          flat[static_cast<std::size_t>(i * m + j)];
  return mat;
}

GroupElem encode_matrix(const FiniteGroupHandle& g, const RingMatrix& mat) {
  const auto& ops = matrix_ops_of(g);
  const int m = ops.size();
  if (mat.q != ops.q() || mat.s != ops.s() ||
      static_cast<int>(mat.entries.size()) != m)
    throw InvalidParamsError("matrix shape does not match the group");
  RingMatrixOps::Mat flat(static_cast<std::size_t>(m) * m,
                          std::vector<int>(static_cast<std::size_t>(ops.s())));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(mat.entries[static_cast<std::size_t>(i)].size()) != m)
      throw InvalidParamsError("matrix shape does not match the group");
    for (int j = 0; j < m; ++j) {
      const auto& p =
          mat.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (static_cast<int>(p.size()) != ops.s())
        throw InvalidParamsError("entry coefficient vector has wrong length");
      for (const int c : p)
        if (c < 0 || c >= ops.q())
          throw InvalidParamsError("coefficient outside the field");
      flat[static_cast<std::size_t>(i * m + j)] = p;
    }
  }
  return ops.encode(flat);
}

std::vector<std::vector<GroupElem>> standard_subgroups(
    const FiniteGroupHandle& g) {
  std::vector<std::vector<GroupElem>> result;
  if (g.family == GroupFamily::kAffineWindows) {
    const int m = static_cast<int>(g.params[0]);
    for (int i = 0; i < m; ++i) {
      std::vector<GroupElem> gens;
      for (int j = 0; j < m; ++j)
        if (j != i) gens.push_back(g.generators[static_cast<std::size_t>(j)]);
      result.push_back(std::move(gens));
    }
    return result;
  }
  if (g.family == GroupFamily::kTruncatedElementary) {
    const auto& ops = matrix_ops_of(g);
    const int m = ops.size();
    const int emax = std::min(1, ops.s() - 1);
    for (int i = 0; i < m; ++i) {
      std::vector<GroupElem> gens;
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        for (int e = 0; e <= emax; ++e)
          for (int c = 1; c < ops.q(); ++c) {
            std::vector<int> r(static_cast<std::size_t>(e) + 1, 0);
            r[static_cast<std::size_t>(e)] = c;
            gens.push_back(elementary_gen(g, j, (j + 1) % m, r));
          }
      }
      result.push_back(std::move(gens));
    }
    return result;
  }
  throw UnsupportedFamilyError(
      "standard subgroups exist only for the affine and matrix families");
}

std::vector<GroupElem> subgroup_closure(const FiniteGroupHandle& g,
                                        const std::vector<GroupElem>& gens,
                                        std::int64_t cap) {
  if (!g.ops) throw InvalidParamsError("group handle has no operations");
  const std::int64_t resolved_cap = cap < 0 ? default_capacity() : cap;
  const std::size_t want = g.ops->encoded_size();
  for (const auto& e : gens)
    if (e.size() != want)
      throw InvalidParamsError("generator encoding has the wrong length");

  std::vector<GroupElem> elements{g.ops->identity()};
  std::unordered_set<GroupElem> seen(elements.begin(), elements.end());
  std::vector<GroupElem> frontier = elements;
  while (!frontier.empty()) {
    std::vector<GroupElem> next;
    for (const auto& x : frontier)
      for (const auto& gen : gens) {
        GroupElem y = g.ops->multiply(x, gen);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    std::sort(next.begin(), next.end());
    if (static_cast<std::int64_t>(elements.size() + next.size()) > resolved_cap)
      throw CapacityError("subgroup closure exceeds the configured capacity");
    elements.insert(elements.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return elements;
}

std::vector<GroupElem> group_elements(const FiniteGroupHandle& g,
                                      std::int64_t cap) {
  return subgroup_closure(g, g.generators, cap);
}

std::vector<GroupElem> cosets(const FiniteGroupHandle& g,
                              const std::vector<GroupElem>& subgroup_elems,
                              std::int64_t cap) {
  if (subgroup_elems.empty())
    throw InvalidParamsError("subgroup element set is empty");
  std::vector<GroupElem> universe = group_elements(g, cap);
  std::sort(universe.begin(), universe.end());
  const std::unordered_set<GroupElem> sub(subgroup_elems.begin(),
                                          subgroup_elems.end());
  if (!sub.count(g.ops->identity()))
    throw InvalidParamsError("subgroup element set lacks the identity");
  std::unordered_set<GroupElem> visited;
  visited.reserve(universe.size());
  std::vector<GroupElem> reps;
  for (const auto& x : universe) {
    if (visited.count(x)) continue;
    reps.push_back(x);  // ascending sweep: first sighting is the minimum
    for (const auto& k : subgroup_elems) visited.insert(g.ops->multiply(x, k));
  }
  return reps;
}

FiniteGroupHandle direct_product(const FiniteGroupHandle& a,
                                 const FiniteGroupHandle& b) {
  if (!a.ops || !b.ops)
    throw InvalidParamsError("group handle has no operations");
  FiniteGroupHandle g;
  g.ops = std::make_shared<ProductOps>(a.ops, b.ops);
  g.family = GroupFamily::kDirectProduct;
  g.factors = {std::make_shared<const FiniteGroupHandle>(a),
               std::make_shared<const FiniteGroupHandle>(b)};
  const GroupElem ea = a.ops->identity();
  const GroupElem eb = b.ops->identity();
  for (const auto& x : a.generators) g.generators.push_back(x + eb);
  for (const auto& y : b.generators) g.generators.push_back(ea + y);
  if (a.known_order && b.known_order)
    g.known_order = checked_mul(*a.known_order, *b.known_order);
  return g;
}

std::vector<std::vector<GroupElem>> paired_subgroups(
    const FiniteGroupHandle& product,
    const std::vector<std::pair<int, int>>& pairing) {
  if (product.family != GroupFamily::kDirectProduct ||
      product.factors.size() != 2)
    throw UnsupportedFamilyError("paired subgroups need a product handle");
  const auto& fa = *product.factors[0];
  const auto& fb = *product.factors[1];
  const auto subs_a = standard_subgroups(fa);
  const auto subs_b = standard_subgroups(fb);
  const GroupElem ea = fa.ops->identity();
  const GroupElem eb = fb.ops->identity();
  std::vector<std::vector<GroupElem>> result;
  for (const auto& [pa, pb] : pairing) {
    if (pa < 0 || pa >= static_cast<int>(subs_a.size()) || pb < 0 ||
        pb >= static_cast<int>(subs_b.size()))
      throw InvalidParamsError("pairing index out of range");
    std::vector<GroupElem> gens;
    for (const auto& x : subs_a[static_cast<std::size_t>(pa)])
      gens.push_back(x + eb);
    for (const auto& y : subs_b[static_cast<std::size_t>(pb)])
      gens.push_back(ea + y);
    result.push_back(std::move(gens));
  }
  return result;
}

bool quotient_check(const FiniteGroupHandle& g,
                    const std::vector<GroupElem>& normal_elems,
                    const std::vector<std::vector<GroupElem>>& subgroup_gens,
                    std::int64_t cap) {
  if (!g.ops) throw InvalidParamsError("group handle has no operations");
  const std::unordered_set<GroupElem> normal(normal_elems.begin(),
                                             normal_elems.end());
  for (const auto& gen : g.generators) {
    const GroupElem inv = g.ops->inverse(gen);
    for (const auto& n : normal_elems)
      if (!normal.count(g.ops->multiply(g.ops->multiply(gen, n), inv)))
        throw NotNormalError(
            "set is not closed under conjugation by the group's generators");
  }
  const GroupElem e = g.ops->identity();
  for (const auto& gens : subgroup_gens)
    for (const auto& elem : subgroup_closure(g, gens, cap))
      if (elem != e && normal.count(elem)) return false;
  return true;
}

}  // namespace hrg
