#pragma once

#include <set>
#include <vector>

#include "oracles.hpp"
#include "trigeom/projective.hpp"
#include "trigeom/triform.hpp"

namespace support {

inline trigeom::TriForm cat(const char* type, const trigeom::FieldSpec& f, int n = 0,
                            std::optional<long long> param = std::nullopt) {
  const auto t = trigeom::parse_catalog_type(type);
  std::optional<trigeom::Scalar> s;
  if (param) s = trigeom::Scalar(f, *param);
  return trigeom::catalog_form(trigeom::CatalogEntry(t, s), n ? n : trigeom::catalog_rank(t), f);
}

// Every catalog type that exists over a prime field, each with the smallest
// parameter satisfying its condition, at dimension n (types of larger rank
// are skipped).
inline std::vector<trigeom::TriForm> catalog_over(const trigeom::FieldSpec& f, int n = 7) {
  using namespace trigeom;
  std::vector<TriForm> out;
  for (CatalogType t : all_catalog_types()) {
    if (catalog_rank(t) > n) continue;
    if (!catalog_needs_parameter(t)) {
      out.push_back(catalog_form(CatalogEntry(t), n, f));
      continue;
    }
    for (long long a = 0; a < static_cast<long long>(f.characteristic()); ++a) {
      const CatalogEntry e(t, Scalar(f, a));
      if (catalog_condition_holds(e, f)) {
        out.push_back(catalog_form(e, n, f));
        break;
      }
    }
  }
  return out;
}

inline oracle::IVec ivec(const trigeom::ProjectiveSpace& space, const trigeom::FpVector& v) {
  oracle::IVec out;
  for (int i = 0; i < space.dim(); ++i) out.push_back(v.c[static_cast<std::size_t>(i)]);
  return out;
}

inline std::set<oracle::Line> as_oracle_lines(const trigeom::ProjectiveSpace& space,
                                              const std::vector<trigeom::FpLine>& lines) {
  std::set<oracle::Line> out;
  for (const auto& l : lines) {
    oracle::Line pts;
    for (auto idx : space.points_on_line(l)) pts.insert(ivec(space, space.point(idx)));
    out.insert(pts);
  }
  return out;
}

}  // namespace support
