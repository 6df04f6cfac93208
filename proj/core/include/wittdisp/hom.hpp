#ifndef WITTDISP_HOM_HPP
#define WITTDISP_HOM_HPP

#include <cstdint>
#include <vector>

#include "wittdisp/ring.hpp"

namespace wd {

enum class HomKind {
  Identity,
  Residue,      // local R -> residue field
  ReducePrec,   // GR(p^a,f) -> GR(p^b,f), b <= a
  KillVars,     // R0[t]/t^ell -> R0, jet -> constants quotient (all t_i -> 0)
  IncludeConst, // R0 -> R0[t]/t^ell or R0 -> jet
  FieldEmbed,   // F_{p^f} -> F_{p^{f'}} with f | f'
  FrobeniusPow, // x -> x^(p^k) on an F_p-algebra
  Table,        // explicit images, indexed by source element index
  Compose,
};

// Homomorphism of base rings. Always unital; constructors check the defining data,
// `validate` spot-checks additivity/multiplicativity.
class RingHom {
public:
  RingHom() = default;

  static RingHom identity(const Ring& r);
  static RingHom residue(const Ring& r);
  static RingHom reduce_prec(const Ring& src, int b);
  static RingHom kill_vars(const Ring& src);
  static RingHom include_const(const Ring& tgt);
  static RingHom field_embed(const Ring& src, const Ring& tgt);
  static RingHom frobenius_pow(const Ring& r, int k);
  static RingHom table(const Ring& src, const Ring& tgt, std::vector<Relem> images);
  static RingHom compose(const RingHom& g, const RingHom& f); // g after f

  bool ok() const { return src_.ok(); }
  const Ring& source() const { return src_; }
  const Ring& target() const { return tgt_; }
  HomKind kind() const { return kind_; }

  Relem apply(const Relem& x) const;

  // exact check of 0,1 and sampled check of +,*
  bool validate(long samples, uint64_t seed = 7) const;

private:
  HomKind kind_ = HomKind::Identity;
  Ring src_, tgt_;
  int k_ = 0;                   // FrobeniusPow exponent / ReducePrec target a
  Relem gen_image_;             // FieldEmbed: image of the source generator x
  std::vector<Relem> table_;
  std::vector<RingHom> parts_;  // Compose: parts_[0] = f, parts_[1] = g
};

Relem apply_hom(const RingHom& h, const Relem& x);

} // namespace wd

#endif
