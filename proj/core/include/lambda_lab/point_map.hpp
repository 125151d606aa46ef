#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambda_lab/subset.hpp"

namespace lambda_lab {

/// A total function between two finite labeled sets, by position.
struct PointMap {
  std::vector<std::string> domain;
  std::vector<std::string> codomain;
  std::vector<int> image;  // image[i] = codomain position of f(domain[i])

  static PointMap make(std::vector<std::string> domain, std::vector<std::string> codomain,
                       const std::map<std::string, std::string>& assignment);
  static PointMap identity(std::vector<std::string> labels);
  /// g ∘ f (apply f first).
  static PointMap compose(const PointMap& g, const PointMap& f);
  /// All |codomain|^|domain| functions, in lexicographic image order.
  static std::vector<PointMap> all_maps(std::vector<std::string> domain,
                                        std::vector<std::string> codomain);

  int apply(int pos) const { return image.at(pos); }
  const std::string& apply_label(const std::string& label) const;

  bool injective() const;
  bool surjective() const;
  /// f^{-1}(A) for A a subset of the codomain.
  Subset preimage(const Subset& target) const;

  bool operator==(const PointMap& o) const {
    return domain == o.domain && codomain == o.codomain && image == o.image;
  }

  std::string describe() const;
};

}  // namespace lambda_lab
