#include "hrg/degrees.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <type_traits>

#include "hrg/errors.hpp"

namespace hrg {

static_assert(std::is_same_v<TypeRegularityTable, decltype(TypeRegularityResult::table)>,
              "prediction input must be exactly what type_regularity measures");

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class pow_big(const mpz_class& base, const mpz_class& exp) {
  if (!exp.fits_ulong_p()) {
    throw CapacityError("degree formula exponent " + exp.get_str() +
                        " is beyond practical integer sizes");
  }
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return out;
}

mpz_class q_pow(long q, const mpz_class& exp) { return pow_big(mpz_class(q), exp); }

/// Exact division with a loud failure: every exponent in the closed forms
/// is an integer, so a remainder means the formula was transcribed wrong.
mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (a % b != 0) {
    throw InvalidParamsError("internal degree-formula error: " + a.get_str() +
                             " is not divisible by " + b.get_str());
  }
  return a / b;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParamsError(message);
}

/// Exponent of the index of the subgroup obtained by splitting an arc of
/// `m` free columns at offset `j` (1 <= j <= m): inserting a new anchor
/// there costs arc_exponent(m) - arc_exponent(j-1) - arc_exponent(m-j).
mpz_class split_exponent(long m, long j) {
  return arc_exponent(m) - arc_exponent(j - 1) - arc_exponent(m - j);
}

std::string family_name(DegreeFamily f) {
  switch (f) {
    case DegreeFamily::kElBase: return "el-base";
    case DegreeFamily::kElSymmetrized: return "el-symmetrized";
    case DegreeFamily::kElAdhoc: return "el-adhoc";
    case DegreeFamily::kAffineBase: return "affine-base";
    case DegreeFamily::kAffine3r: return "affine-3r";
    case DegreeFamily::kAffineAdhoc: return "affine-adhoc";
    case DegreeFamily::kAffineSymmetrized: return "affine-symmetrized";
  }
  return "unknown";
}

// Symmetrized exponents grow with (n+1)!; past n = 8 a single degree would
// need gigabit integers, which no consumer of these oracles can use.
constexpr int kMaxSymmetrizedN = 8;

}  // namespace

BigDegreeProfile widen(const DegreeProfile& p) {
  BigDegreeProfile out;
  out.dims.reserve(p.dims.size());
  for (std::int64_t d : p.dims) out.dims.emplace_back(static_cast<long>(d));
  return out;
}

mpz_class arc_exponent(long m) {
  require(m >= 0, "arc_exponent needs m >= 0, got " + std::to_string(m));
  const mpz_class mm(m);
  return exact_div(mm * mm * mm + 6 * mm * mm + 5 * mm, 6);
}

BigDegreeProfile el_profile(const DegreeFormulaInput& input) {
  const long q = input.q;
  switch (input.family) {
    case DegreeFamily::kElBase: {
      require(input.n == 2, "the full standard system is hyper-regular only on "
                            "three columns (n = 2)");
      require(q >= 2, "el families need a residue field size q >= 2");
      // Vertex subgroups sit on an arc of 2 free columns; an edge subgroup
      // keeps one free column.  Splitting is offset-independent here.
      BigDegreeProfile out;
      out.dims.push_back(2 * q_pow(q, split_exponent(2, 1)));
      out.dims.push_back(q_pow(q, arc_exponent(1)));
      return out;
    }
    case DegreeFamily::kElAdhoc: {
      require(input.n == 4, "the knight-move pairing is defined on five "
                            "columns (n = 4)");
      require(q >= 2, "el families need a residue field size q >= 2");
      // Each subgroup pairs column windows i and 2i mod 5, so every index is
      // a product of two one-column splits, one per window.
      BigDegreeProfile out;
      out.dims.push_back(4 * q_pow(q, split_exponent(4, 1) + split_exponent(4, 2)));
      out.dims.push_back(3 * q_pow(q, split_exponent(3, 1) + split_exponent(2, 1)));
      out.dims.push_back(2 * q_pow(q, split_exponent(2, 1) + arc_exponent(1)));
      out.dims.push_back(q_pow(q, 2 * arc_exponent(1)));
      return out;
    }
    case DegreeFamily::kElSymmetrized: {
      const long n = input.n;
      require(n >= 2, "el-symmetrized needs n >= 2");
      require(q >= 2, "el families need a residue field size q >= 2");
      if (n > kMaxSymmetrizedN) {
        throw CapacityError("el-symmetrized degrees for n > " +
                            std::to_string(kMaxSymmetrizedN) +
                            " exceed practical integer sizes");
      }
      const mpz_class fact_n1 = factorial(static_cast<unsigned long>(n + 1));
      BigDegreeProfile out;
      // d_0: every one-column subgroup splits n ways; the product over all
      // orderings raises the combined split exponent to (n+1)!/n copies of
      // the full sum, which telescopes to (n+1)(n+2)(n+3)/12 * (n+1)!.
      const mpz_class e0 =
          exact_div(fact_n1 * (n + 1) * (n + 2) * (n + 3), 12);
      out.dims.push_back(n * q_pow(q, e0));
      for (long k = 1; k <= n - 1; ++k) {
        mpz_class sum = 0;
        for (long w = 1; w <= n - k; ++w) {
          // A (k+1)-subset with a window of w free columns contributes the
          // telescoped split sum w(w+1)(w+2)(w+3)/12; binom counts how many
          // subsets carry that window.
          const mpz_class window =
              exact_div(mpz_class(w) * (w + 1) * (w + 2) * (w + 3), 12);
          sum += binom(static_cast<unsigned long>(n - w - 1),
                       static_cast<unsigned long>(k - 1)) *
                 window;
        }
        const mpz_class reps = exact_div(
            fact_n1, binom(static_cast<unsigned long>(n),
                           static_cast<unsigned long>(k + 1)));
        out.dims.push_back((n - k) * q_pow(q, reps * sum));
      }
      return out;
    }
    default:
      throw UnsupportedFamilyError("el_profile cannot evaluate family " +
                                   family_name(input.family));
  }
}

BigDegreeProfile affine_profile(const DegreeFormulaInput& input) {
  switch (input.family) {
    case DegreeFamily::kAffineBase: {
      require(input.m == 3, "the full standard system is hyper-regular only on "
                            "exactly three strands (larger gaps give unequal "
                            "insertion indices)");
      BigDegreeProfile out;
      out.dims.push_back(2 * binom(3, 1));
      out.dims.push_back(binom(2, 1));
      return out;
    }
    case DegreeFamily::kAffine3r: {
      const long r = input.r;
      require(r >= 1, "affine-3r needs a spacing r >= 1");
      BigDegreeProfile out;
      out.dims.push_back(2 * binom(static_cast<unsigned long>(3 * r),
                                   static_cast<unsigned long>(r)));
      out.dims.push_back(binom(static_cast<unsigned long>(2 * r),
                               static_cast<unsigned long>(r)));
      return out;
    }
    case DegreeFamily::kAffineAdhoc: {
      const long r = input.r;
      require(r >= 1, "affine-adhoc needs a spacing r >= 1");
      const auto b = [&](long n, long k) {
        return binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      };
      // Five strand groups at spacing r, knight-paired: each index is a
      // product of two strand-insertion binomials, one per paired window.
      BigDegreeProfile out;
      out.dims.push_back(4 * b(5 * r, r) * b(5 * r, 2 * r));
      out.dims.push_back(3 * b(4 * r, r) * b(3 * r, 2 * r));
      out.dims.push_back(2 * b(3 * r, r) * b(2 * r, r));
      out.dims.push_back(b(2 * r, r) * b(2 * r, r));
      return out;
    }
    case DegreeFamily::kAffineSymmetrized: {
      const long m = input.m;
      require(m >= 3, "affine-symmetrized needs at least three strands");
      const long n = m - 1;
      if (n > kMaxSymmetrizedN) {
        throw CapacityError("affine-symmetrized degrees for more than " +
                            std::to_string(kMaxSymmetrizedN + 1) +
                            " strands exceed practical integer sizes");
      }
      const mpz_class fact_n1 = factorial(static_cast<unsigned long>(n + 1));
      BigDegreeProfile out;
      mpz_class base0 = 1;
      for (long j = 1; j <= n; ++j) {
        base0 *= binom(static_cast<unsigned long>(n + 1),
                       static_cast<unsigned long>(j));
      }
      out.dims.push_back(n * pow_big(base0, exact_div(fact_n1, n)));
      for (long k = 1; k <= n - 1; ++k) {
        mpz_class base = 1;
        for (long w = 1; w <= n - k; ++w) {
          mpz_class window = 1;
          for (long j = 1; j <= w; ++j) {
            window *= binom(static_cast<unsigned long>(w + 1),
                            static_cast<unsigned long>(j));
          }
          const mpz_class count = binom(static_cast<unsigned long>(n - w - 1),
                                        static_cast<unsigned long>(k - 1));
          base *= pow_big(window, count);
        }
        const mpz_class reps = exact_div(
            fact_n1, binom(static_cast<unsigned long>(n),
                           static_cast<unsigned long>(k + 1)));
        out.dims.push_back((n - k) * pow_big(base, reps));
      }
      return out;
    }
    default:
      throw UnsupportedFamilyError("affine_profile cannot evaluate family " +
                                   family_name(input.family));
  }
}

namespace {

std::string type_set_name(const std::vector<int>& j) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out << ',';
    out << j[i];
  }
  out << '}';
  return out.str();
}

std::int64_t table_entry(const TypeRegularityTable& table,
                         const std::vector<int>& j, int i) {
  const auto row = table.find(j);
  if (row == table.end()) {
    throw InvalidParamsError("type-regularity table has no row for type set " +
                             type_set_name(j));
  }
  const auto cell = row->second.find(i);
  if (cell == row->second.end()) {
    throw InvalidParamsError("type-regularity table row " + type_set_name(j) +
                             " has no count for part " + std::to_string(i));
  }
  return cell->second;
}

}  // namespace

BigDegreeProfile symmetrized_profile_from_type_regular(
    const TypeRegularityTable& table, const PermGroup& h) {
  const int nparts = h.degree();
  require(nparts >= 2, "a symmetrization prediction needs at least two parts");
  const auto& elems = h.elements();

  BigDegreeProfile out;
  for (int size = 1; size <= nparts - 1; ++size) {
    // Walk every type set of this size; the prediction must not depend on
    // which one we pick.
    std::vector<int> j(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) j[static_cast<std::size_t>(i)] = i;
    bool have = false;
    mpz_class value;
    std::vector<int> value_witness;
    for (;;) {
      mpz_class pred = 0;
      std::vector<int> image(j.size());
      for (int i = 0; i < nparts; ++i) {
        if (std::binary_search(j.begin(), j.end(), i)) continue;
        mpz_class term = 1;
        for (const auto& pi : elems) {
          for (std::size_t t = 0; t < j.size(); ++t) {
            image[t] = pi[static_cast<std::size_t>(j[t])];
          }
          std::sort(image.begin(), image.end());
          term *= table_entry(table, image, pi[static_cast<std::size_t>(i)]);
        }
        pred += term;
      }
      if (!have) {
        have = true;
        value = pred;
        value_witness = j;
      } else if (pred != value) {
        throw NotSetTransitiveError(
            "symmetrization prediction is type-dependent: type sets " +
            type_set_name(value_witness) + " and " + type_set_name(j) +
            " predict " + value.get_str() + " and " + pred.get_str());
      }
      // Next ascending size-subset of {0..nparts-1}.
      int t = size - 1;
      while (t >= 0 && j[static_cast<std::size_t>(t)] == nparts - size + t) --t;
      if (t < 0) break;
      ++j[static_cast<std::size_t>(t)];
      for (int u = t + 1; u < size; ++u) {
        j[static_cast<std::size_t>(u)] = j[static_cast<std::size_t>(u - 1)] + 1;
      }
    }
    out.dims.push_back(value);
  }
  return out;
}

}  // namespace hrg
