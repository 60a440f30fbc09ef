#include "ncg/monoid.hpp"

#include <string>

#include "ncg/curves.hpp"
#include "ncg/errors.hpp"

namespace ncg {

  namespace {
    std::vector<int> interior_of(const FreeWord& a, Rank rank) {
      std::vector<int> out;
      auto w = winding_numbers(a, rank);
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] == 1) out.push_back(static_cast<int>(j) + 1);
      }
      return out;
    }

    void drop_identities(std::vector<Simple>& f) {
      std::erase_if(f, [](const Simple& s) { return s.is_identity(); });
    }
  }  // namespace

  Simple simple_from_word(const FreeWord& a, Rank rank) {
    if (!is_noncrossing(a, rank)) {
      throw DomainError(ErrorKind::NotNonCrossing, "element is not non-crossing");
    }
    if (!is_nc_divisor(a, rank)) {
      throw DomainError(ErrorKind::NotDivisor, "element does not divide g");
    }
    return Simple(rank, a, interior_of(a, rank));
  }

  Simple certify_internal(const FreeWord& a, Rank rank, const char* context) {
    if (!is_nc_divisor(a, rank)) {
      throw EngineError(std::string(context) + ": result is not a simple");
    }
    return Simple(rank, a, interior_of(a, rank));
  }

  Simple identity_simple(Rank rank) { return certify_internal(FreeWord{}, rank, "identity"); }

  Simple garside_simple(Rank rank) {
    return certify_internal(FreeWord::coxeter(rank), rank, "garside element");
  }

  Simple complement(const Simple& a) {
    return certify_internal(fw_mul(fw_inv(a.word()), FreeWord::coxeter(a.rank())), a.rank(),
                            "complement");
  }

  Simple phi(const Simple& a) {
    FreeWord g = FreeWord::coxeter(a.rank());
    return certify_internal(fw_conj(a.word(), g), a.rank(), "phi");
  }

  NormalForm normalize(std::span<const Simple> factors) {
    std::vector<Simple> f(factors.begin(), factors.end());
    drop_identities(f);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        const Rank rank = f[k].rank();
        FreeWord c = nc_meet(complement(f[k]).word(), f[k + 1].word(), rank);
        if (c.empty()) continue;
        f[k] = certify_internal(fw_mul(f[k].word(), c), rank, "normalize");
        f[k + 1] = certify_internal(fw_mul(fw_inv(c), f[k + 1].word()), rank, "normalize");
        changed = true;
      }
      drop_identities(f);
    }
    return NormalForm{std::move(f)};
  }

  FreeWord multiply_out(std::span<const Simple> factors) {
    FreeWord p;
    for (const Simple& s : factors) p = fw_mul(p, s.word());
    return p;
  }

  bool monoid_equal(std::span<const Simple> x, std::span<const Simple> y) {
    const bool by_normal_form = normalize(x) == normalize(y);
    // M_g embeds in F_n, so the free-group products must agree with the
    // normal forms; a disagreement is a bug in one of the two layers.
    const bool by_product = multiply_out(x) == multiply_out(y);
    if (by_normal_form != by_product) {
      throw EngineError("normal forms disagree with free-group products");
    }
    return by_normal_form;
  }

  bool simple_divides(const Simple& a, const Simple& b) {
    return contains(b.word(), a.word(), b.rank());
  }

}  // namespace ncg
