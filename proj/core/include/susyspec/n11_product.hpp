#ifndef SUSYSPEC_N11_PRODUCT_HPP
#define SUSYSPEC_N11_PRODUCT_HPP

#include <array>
#include <string_view>

#include "susyspec/phi.hpp"

namespace susyspec {

/// The six candidate tensor products of N=(1,1) data. All share the natural
/// grading gamma1 ox gamma2 and Hodge star1 ox star2 and differ only in the
/// operator pair:
///   Main: D = D1 ox 1  + *1 ox D2,   Db = Db1 ox *2 + g1 ox Db2
///   V1:   D = D1 ox 1  + *1 ox D2,   Db = Db1 ox g2 + *1 ox Db2
///   V2:   D = D1 ox *2 + 1  ox D2,   Db = Db1 ox g2 + *1 ox Db2
///   V3:   D = D1 ox *2 + 1  ox D2,   Db = Db1 ox *2 + g1 ox Db2
///   V4:   D = D1 ox 1  + g1 ox D2,   Db = Db1 ox 1  + g1 ox Db2
///   V5:   D = D1 ox g2 + 1  ox D2,   Db = Db1 ox g2 + 1  ox Db2
enum class ProductVariant { kMain, kV1, kV2, kV3, kV4, kV5 };

inline constexpr std::array<ProductVariant, 6> kAllVariants = {
    ProductVariant::kMain, ProductVariant::kV1, ProductVariant::kV2,
    ProductVariant::kV3,   ProductVariant::kV4, ProductVariant::kV5};

std::string_view variant_name(ProductVariant v);
ProductVariant variant_from_name(std::string_view name);

N11Data n11_product(const N11Data& x, const N11Data& y, ProductVariant v,
                    const Tolerance& tol);

/// Lemma on associated even data: VU conjugates D1 ox 1 + *1 ox D2 into
/// D1 ox 1 + g1 ox D2, with U built from (*1, g2) and V from (g1, g2).
struct AssociatedEquivalence {
  LinearOp u, v;
  CheckReport report;
};
AssociatedEquivalence associated_n1_equivalence(const N11Data& x, const N11Data& y,
                                                const Tolerance& tol);

/// 6x6 table of operator distances max(|D_a - D_b|, |Db_a - Db_b|).
RealMatrix variant_distinguisher(const N11Data& x, const N11Data& y,
                                 const Tolerance& tol);

/// Heat-trace factorization Tr exp(-eps D^2) = product of factor traces,
/// valid whenever {star1, D1} = 0 splits the square.
double heat_trace_factorization_residual(const N11Data& x, const N11Data& y,
                                         double eps, const Tolerance& tol);

}  // namespace susyspec

#endif
