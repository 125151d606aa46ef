#include "lambda_lab/point_map.hpp"

#include <algorithm>

namespace lambda_lab {

namespace {
int find_label(const std::vector<std::string>& labels, const std::string& label) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("unknown label " + label);
  return static_cast<int>(it - labels.begin());
}
}  // namespace

PointMap PointMap::make(std::vector<std::string> domain, std::vector<std::string> codomain,
                        const std::map<std::string, std::string>& assignment) {
  PointMap f;
  f.domain = std::move(domain);
  f.codomain = std::move(codomain);
  f.image.reserve(f.domain.size());
  for (const auto& x : f.domain) {
    auto it = assignment.find(x);
    if (it == assignment.end()) throw std::invalid_argument("map not total: missing " + x);
    f.image.push_back(find_label(f.codomain, it->second));
  }
  return f;
}

PointMap PointMap::identity(std::vector<std::string> labels) {
  PointMap f;
  f.domain = labels;
  f.codomain = std::move(labels);
  f.image.resize(f.domain.size());
  for (size_t i = 0; i < f.image.size(); ++i) f.image[i] = static_cast<int>(i);
  return f;
}

PointMap PointMap::compose(const PointMap& g, const PointMap& f) {
  if (f.codomain != g.domain) throw std::invalid_argument("maps do not compose");
  PointMap h;
  h.domain = f.domain;
  h.codomain = g.codomain;
  h.image.reserve(f.image.size());
  for (int mid : f.image) h.image.push_back(g.image.at(mid));
  return h;
}

std::vector<PointMap> PointMap::all_maps(std::vector<std::string> domain,
                                         std::vector<std::string> codomain) {
  size_t n = domain.size(), m = codomain.size();
  std::vector<PointMap> out;
  if (m == 0) {
    if (n == 0) out.push_back(PointMap{domain, codomain, {}});
    return out;  // no maps into the empty set from a nonempty set
  }
  std::vector<int> image(n, 0);
  while (true) {
    out.push_back(PointMap{domain, codomain, image});
    size_t i = 0;
    while (i < n && ++image[i] == static_cast<int>(m)) image[i++] = 0;
    if (i == n) break;
  }
  return out;
}

const std::string& PointMap::apply_label(const std::string& label) const {
  return codomain[image[find_label(domain, label)]];
}

bool PointMap::injective() const {
  std::vector<int> seen(codomain.size(), 0);
  for (int y : image)
    if (seen[y]++) return false;
  return true;
}

bool PointMap::surjective() const {
  std::vector<int> seen(codomain.size(), 0);
  for (int y : image) seen[y] = 1;
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

Subset PointMap::preimage(const Subset& target) const {
  if (target.width() != static_cast<int>(codomain.size()))
    throw std::invalid_argument("subset width mismatch");
  Subset s = Subset::none(static_cast<int>(domain.size()));
  for (size_t i = 0; i < image.size(); ++i)
    if (target.contains(image[i])) s = s.with(static_cast<int>(i));
  return s;
}

std::string PointMap::describe() const {
  std::string out = "[";
  for (size_t i = 0; i < domain.size(); ++i) {
    if (i) out += " ";
    out += domain[i] + "->" + codomain[image[i]];
  }
  return out + "]";
}

}  // namespace lambda_lab
