#include "polya/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace polya {

const char* to_string(TwoStatus status) {
  switch (status) {
    case TwoStatus::unramified: return "unramified";
    case TwoStatus::partially_ramified: return "partially_ramified";
    case TwoStatus::totally_ramified: return "totally_ramified";
  }
  return "?";
}

int BiquadraticFieldData::e_product_log2() const {
  int total = 0;
  for (const auto& rp : ramified) total += rp.e == 4 ? 2 : 1;
  return total;
}

const mpz_class& BiquadraticFieldData::d(int i) const {
  ensure(i >= 1 && i <= 3, "BiquadraticFieldData: subfield index out of range");
  return i == 1 ? d1 : i == 2 ? d2 : d3;
}

const FactoredInteger& BiquadraticFieldData::factors(int i) const {
  ensure(i >= 1 && i <= 3, "BiquadraticFieldData: subfield index out of range");
  return i == 1 ? f1 : i == 2 ? f2 : f3;
}

BiquadraticFieldData biquadratic_data_from_factors(const FactoredInteger& f1,
                                                   const FactoredInteger& f2) {
  if (f1.sign < 0 || f2.sign < 0)
    throw std::invalid_argument("biquadratic_data: field must be totally real (d_i > 1)");
  if (!f1.squarefree() || !f2.squarefree())
    throw NotSquarefree("biquadratic_data: inputs must be squarefree");

  BiquadraticFieldData out;
  out.f1 = f1;
  out.f2 = f2;
  out.d1 = f1.value();
  out.d2 = f2.value();
  if (out.d1 <= 1 || out.d2 <= 1)
    throw std::invalid_argument("biquadratic_data: d_i must exceed 1");
  if (out.d1 == out.d2) throw std::invalid_argument("biquadratic_data: d1 = d2");

  // d3 is the squarefree part of d1*d2: symmetric difference of supports.
  out.f3.sign = 1;
  std::vector<mpz_class> s1, s2;
  for (const auto& [p, e] : f1.factors) s1.push_back(p);
  for (const auto& [p, e] : f2.factors) s2.push_back(p);
  std::vector<mpz_class> sym;
  std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                std::back_inserter(sym));
  for (const auto& p : sym) out.f3.factors.emplace_back(p, 1u);
  out.d3 = out.f3.value();
  ensure(out.d3 > 1 && out.d3 != out.d1 && out.d3 != out.d2,
         "biquadratic_data: degenerate third subfield");

  // Odd ramified primes: union of the supports, e = 2 each.
  std::vector<mpz_class> odd_union;
  std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(odd_union));
  bool has_two = false;
  for (const auto& p : odd_union)
    if (p == 2) has_two = true;

  int ones = 0;
  for (int i = 1; i <= 3; ++i)
    if (mpz_fdiv_ui(out.d(i).get_mpz_t(), 4) == 1) ++ones;
  ensure(ones == 0 || ones == 1 || ones == 3, "biquadratic_data: impossible residue pattern");
  out.two_status = ones == 3   ? TwoStatus::unramified
                   : ones == 1 ? TwoStatus::partially_ramified
                               : TwoStatus::totally_ramified;

  for (const auto& p : odd_union)
    if (p != 2) out.ramified.push_back({p, 2});
  if (out.two_status != TwoStatus::unramified) {
    const int e2 = out.two_status == TwoStatus::totally_ramified ? 4 : 2;
    out.ramified.push_back({mpz_class(2), e2});
  } else {
    ensure(!has_two, "biquadratic_data: even d_i with 2 unramified");
  }
  std::sort(out.ramified.begin(), out.ramified.end(),
            [](const RamifiedPrime& a, const RamifiedPrime& b) { return a.p < b.p; });
  return out;
}

BiquadraticFieldData biquadratic_data(const mpz_class& d1, const mpz_class& d2,
                                      const FactoredInteger* hint1, const FactoredInteger* hint2,
                                      uint64_t trial_bound) {
  if (d1 <= 1 || d2 <= 1)
    throw std::invalid_argument("biquadratic_data: d_i must exceed 1");
  const FactoredInteger f1 = factorize(d1, hint1, trial_bound);
  const FactoredInteger f2 = factorize(d2, hint2, trial_bound);
  return biquadratic_data_from_factors(f1, f2);
}

uint64_t F2Basis::vector_of(const SquarefreeClass& cls) const {
  ensure(primes.size() < 64, "F2Basis: too many basis primes");
  uint64_t v = cls.negative() ? 1 : 0;
  for (const auto& p : cls.primes()) {
    const auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p)
      throw InternalError("F2Basis: class support escapes the basis (prime " + p.get_str() + ")");
    v |= uint64_t{1} << (1 + static_cast<unsigned>(it - primes.begin()));
  }
  return v;
}

int f2_rank(std::vector<uint64_t> rows) {
  int rank = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    uint64_t row = rows[i];
    if (row == 0) continue;
    ++rank;
    const int pivot = std::countr_zero(row);
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & (uint64_t{1} << pivot)) rows[j] ^= row;
  }
  return rank;
}

namespace {

std::array<SubfieldDetail, 3> compute_subfields(const BiquadraticFieldData& field,
                                                const CfOptions& options) {
  std::array<SubfieldDetail, 3> out;
  for (int i = 1; i <= 3; ++i) {
    SubfieldDetail& sd = out[static_cast<size_t>(i - 1)];
    sd.d = field.d(i);
    sd.unit = fundamental_unit(sd.d, options);
    sd.delta = field.factors(i).square_class();
    sd.a = a_class(sd.d, field.factors(i), options);
  }
  return out;
}

H1TwoTorsion h1_from_subfields(const BiquadraticFieldData& field,
                               const std::array<SubfieldDetail, 3>& subfields) {
  H1TwoTorsion h1;
  for (const auto& rp : field.ramified) h1.basis.primes.push_back(rp.p);
  for (int i = 0; i < 3; ++i)
    h1.generators.push_back({"delta" + std::to_string(i + 1), subfields[static_cast<size_t>(i)].delta});
  for (int i = 0; i < 3; ++i)
    h1.generators.push_back({"a" + std::to_string(i + 1), subfields[static_cast<size_t>(i)].a});

  // [delta3] = [delta1][delta2] in Q*/(Q*)^2; the rank is therefore capped at
  // min(5, s). Checked on every run, not only in tests.
  ensure(h1.generators[0].cls * h1.generators[1].cls == h1.generators[2].cls,
         "h1_two_torsion: delta3 is not delta1*delta2");

  std::vector<uint64_t> rows;
  rows.reserve(h1.generators.size());
  for (const auto& g : h1.generators) rows.push_back(h1.basis.vector_of(g.cls));
  h1.rank = f2_rank(std::move(rows));
  ensure(h1.rank <= std::min(5, field.s()), "h1_two_torsion: rank exceeds its cap");
  return h1;
}

}  // namespace

H1TwoTorsion h1_two_torsion(const BiquadraticFieldData& field, const CfOptions& options) {
  return h1_from_subfields(field, compute_subfields(field, options));
}

PolyaComputation polya_compute(const BiquadraticFieldData& field, const CfOptions& options) {
  PolyaComputation out;
  out.field = field;
  out.subfields = compute_subfields(field, options);
  out.h1 = h1_from_subfields(field, out.subfields);

  bool index_two = false;
  if (field.two_status == TwoStatus::totally_ramified) {
    std::array<NormTwo, 3> nt{};
    bool all = true;
    for (int i = 0; i < 3; ++i) {
      nt[static_cast<size_t>(i)] = norm_two_solvable(out.subfields[static_cast<size_t>(i)].d, options);
      all = all && nt[static_cast<size_t>(i)] != NormTwo::neither;
    }
    out.norm_two = nt;
    index_two = all;
  }

  PolyaResult& r = out.result;
  r.h1_rank = out.h1.rank;
  r.h1_index_two = index_two;
  r.generators = out.h1.generators;
  const int h1_log2 = out.h1.rank + (index_two ? 1 : 0);
  r.order_log2 = field.e_product_log2() - h1_log2;
  ensure(r.order_log2 >= 0, "polya_compute: H1 exceeds the ramification module");
  const bool elementary = field.two_status != TwoStatus::totally_ramified && !index_two;
  if (elementary) r.rank = field.s() - out.h1.rank;
  return out;
}

PolyaResult polya_group(const BiquadraticFieldData& field, const CfOptions& options) {
  return polya_compute(field, options).result;
}

mpz_class hilbert_polya_order(const mpz_class& d, const FactoredInteger* hint,
                              const CfOptions& options, uint64_t trial_bound) {
  const QuadraticFieldData field = quadratic_field_data(d, hint, trial_bound);
  const FundamentalUnit u = fundamental_unit(d, options);
  const int exponent = u.norm == 1 ? field.s - 2 : field.s - 1;
  ensure(exponent >= 0, "hilbert_polya_order: negative exponent");
  return mpz_class(1) << exponent;
}

QuadraticCrossCheck quadratic_crosscheck(const mpz_class& d, const FactoredInteger* hint,
                                         const CfOptions& options, uint64_t trial_bound) {
  QuadraticCrossCheck out;
  out.field = quadratic_field_data(d, hint, trial_bound);
  out.unit = fundamental_unit(d, options);
  const FactoredInteger f = factorize(d, hint, trial_bound);
  out.a = a_class(d, f, options);

  F2Basis basis;
  basis.primes = out.field.ramified_primes;
  out.rank = f2_rank({basis.vector_of(f.square_class()), basis.vector_of(out.a)});
  out.sequence_order = mpz_class(1) << (out.field.s - out.rank);

  const int exponent = out.unit.norm == 1 ? out.field.s - 2 : out.field.s - 1;
  ensure(exponent >= 0, "hilbert_polya_order: negative exponent");
  out.hilbert_order = mpz_class(1) << exponent;
  out.agree = out.hilbert_order == out.sequence_order;
  return out;
}

}  // namespace polya
