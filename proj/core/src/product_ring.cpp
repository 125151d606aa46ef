#include "lambda_lab/product_ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lambda_lab {

namespace {
constexpr std::uint64_t kCardinalityCap = std::uint64_t{1} << 62;
}

IndexSet::IndexSet(std::vector<std::string> labels, std::vector<const FieldSpec*> fields)
    : labels_(std::move(labels)), fields_(std::move(fields)) {
  if (labels_.size() != fields_.size()) throw std::invalid_argument("labels/fields length mismatch");
  if (labels_.size() > 64) throw std::invalid_argument("index set larger than 64 points");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label " + l);
  }
  cardinality_ = 1;
  for (const FieldSpec* f : fields_) {
    cardinality_ *= static_cast<std::uint64_t>(f->order());
    if (cardinality_ > kCardinalityCap) throw std::overflow_error("ring too large to enumerate");
  }
}

Ring IndexSet::make(const std::vector<std::pair<std::string, std::string>>& labeled_fields) {
  std::vector<std::string> labels;
  std::vector<const FieldSpec*> fields;
  for (const auto& [label, field] : labeled_fields) {
    labels.push_back(label);
    fields.push_back(FieldSpec::parse(field));
  }
  return make(std::move(labels), std::move(fields));
}

Ring IndexSet::make(std::vector<std::string> labels, std::vector<const FieldSpec*> fields) {
  if (labels.empty()) throw std::invalid_argument("index set must be nonempty");
  return Ring(new IndexSet(std::move(labels), std::move(fields)));
}

Ring IndexSet::constant(std::vector<std::string> labels, const FieldSpec* field) {
  std::vector<const FieldSpec*> fields(labels.size(), field);
  return make(std::move(labels), std::move(fields));
}

Ring IndexSet::restricted(const Subset& keep) const {
  if (keep.width() != size()) throw std::invalid_argument("subset width mismatch");
  std::vector<std::string> labels;
  std::vector<const FieldSpec*> fields;
  for (int pos : keep.positions()) {
    labels.push_back(labels_[pos]);
    fields.push_back(fields_[pos]);
  }
  return Ring(new IndexSet(std::move(labels), std::move(fields)));
}

int IndexSet::position(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

int IndexSet::require_position(std::string_view label) const {
  int pos = position(label);
  if (pos < 0) throw std::invalid_argument("unknown label " + std::string(label));
  return pos;
}

bool IndexSet::same_as(const IndexSet& other) const {
  if (this == &other) return true;
  return labels_ == other.labels_ && fields_ == other.fields_;
}

Subset IndexSet::subset_of_labels(const std::vector<std::string>& labels) const {
  Subset s = no_points();
  for (const auto& l : labels) s = s.with(require_position(l));
  return s;
}

std::string IndexSet::subset_to_string(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  for (int pos : s.positions()) {
    if (!first) out += ",";
    out += labels_[pos];
    first = false;
  }
  return out + "}";
}

ProdElem IndexSet::zero() const {
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (const FieldSpec* f : fields_) coords.push_back(f->zero());
  return ProdElem(shared_from_this(), std::move(coords));
}

ProdElem IndexSet::one() const {
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (const FieldSpec* f : fields_) coords.push_back(f->one());
  return ProdElem(shared_from_this(), std::move(coords));
}

ProdElem IndexSet::delta(int pos) const {
  if (pos < 0 || pos >= size()) throw std::invalid_argument("unknown label position");
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (int i = 0; i < size(); ++i) coords.push_back(i == pos ? fields_[i]->one() : fields_[i]->zero());
  return ProdElem(shared_from_this(), std::move(coords));
}

ProdElem IndexSet::delta(std::string_view label) const { return delta(require_position(label)); }

ProdElem IndexSet::indicator(const Subset& s) const {
  if (s.width() != size()) throw std::invalid_argument("subset width mismatch");
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (int i = 0; i < size(); ++i)
    coords.push_back(s.contains(i) ? fields_[i]->one() : fields_[i]->zero());
  return ProdElem(shared_from_this(), std::move(coords));
}

ProdElem IndexSet::element_at(std::uint64_t rank) const {
  if (rank >= cardinality_) throw std::out_of_range("element rank out of range");
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (int i = 0; i < size(); ++i) {
    std::uint64_t q = fields_[i]->order();
    coords.push_back(fields_[i]->element(static_cast<int>(rank % q)));
    rank /= q;
  }
  return ProdElem(shared_from_this(), std::move(coords));
}

std::uint64_t IndexSet::rank_of(const ProdElem& f) const {
  if (!same_as(*f.ring())) throw std::invalid_argument("ring mismatch");
  std::uint64_t rank = 0;
  for (int i = size() - 1; i >= 0; --i)
    rank = rank * fields_[i]->order() + static_cast<std::uint64_t>(f.at(i).index());
  return rank;
}

ProdElem IndexSet::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, cardinality_ - 1);
  return element_at(dist(rng));
}

std::string IndexSet::describe() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += " ";
    out += labels_[i] + ":" + fields_[i]->name();
  }
  return out.empty() ? "(empty)" : out;
}

ProdElem::ProdElem(Ring ring, std::vector<FieldElem> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ring_->size())
    throw std::invalid_argument("coordinate count mismatch");
  for (int i = 0; i < ring_->size(); ++i)
    if (coords_[i].spec() != ring_->field(i)) throw std::invalid_argument("field mismatch");
}

const FieldElem& ProdElem::at(std::string_view label) const {
  return coords_[ring_->require_position(label)];
}

Subset ProdElem::support() const {
  Subset s = ring_->no_points();
  for (int i = 0; i < size(); ++i)
    if (!coords_[i].is_zero()) s = s.with(i);
  return s;
}

void ProdElem::same_ring(const ProdElem& o) const {
  if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("ring mismatch");
}

ProdElem ProdElem::operator+(const ProdElem& o) const {
  same_ring(o);
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (int i = 0; i < size(); ++i) coords.push_back(coords_[i] + o.coords_[i]);
  return ProdElem(ring_, std::move(coords));
}

ProdElem ProdElem::operator-(const ProdElem& o) const {
  same_ring(o);
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (int i = 0; i < size(); ++i) coords.push_back(coords_[i] - o.coords_[i]);
  return ProdElem(ring_, std::move(coords));
}

ProdElem ProdElem::operator*(const ProdElem& o) const {
  same_ring(o);
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (int i = 0; i < size(); ++i) coords.push_back(coords_[i] * o.coords_[i]);
  return ProdElem(ring_, std::move(coords));
}

ProdElem ProdElem::operator-() const {
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (const auto& c : coords_) coords.push_back(-c);
  return ProdElem(ring_, std::move(coords));
}

ProdElem ProdElem::pow(std::uint64_t e) const {
  ProdElem acc = ring_->one();
  ProdElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

ProdElem ProdElem::inverse() const {
  if (!is_unit()) throw std::domain_error("division by zero");
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (const auto& c : coords_) coords.push_back(c.inverse());
  return ProdElem(ring_, std::move(coords));
}

ProdElem ProdElem::pseudo_inverse() const {
  std::vector<FieldElem> coords;
  coords.reserve(size());
  for (const auto& c : coords_) coords.push_back(c.is_zero() ? c : c.inverse());
  return ProdElem(ring_, std::move(coords));
}

bool ProdElem::operator==(const ProdElem& o) const {
  return ring_->same_as(*o.ring_) && coords_ == o.coords_;
}

std::string ProdElem::to_string() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += coords_[i].to_string();
  }
  return out + ")";
}

bool ideal_equal(const ProdElem& f, const ProdElem& g) {
  if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("ring mismatch");
  return f.support() == g.support();
}

ProdElem division_witness(const ProdElem& h, const ProdElem& f) {
  if (!h.ring()->same_as(*f.ring())) throw std::invalid_argument("ring mismatch");
  if (!h.support().subset_of(f.support()))
    throw std::invalid_argument("support of h is not contained in support of f");
  std::vector<FieldElem> coords;
  coords.reserve(h.size());
  for (int i = 0; i < h.size(); ++i)
    coords.push_back(h.at(i).is_zero() ? h.at(i) : h.at(i) * f.at(i).inverse());
  return ProdElem(h.ring(), std::move(coords));
}

SupportIdeal::SupportIdeal(Ring ring, Subset support) : ring_(std::move(ring)), support_(support) {
  if (support_.width() != ring_->size()) throw std::invalid_argument("subset width mismatch");
}

SupportIdeal SupportIdeal::principal(const ProdElem& f) {
  return SupportIdeal(f.ring(), f.support());
}

SupportIdeal SupportIdeal::maximal(const Ring& ring, int pos) {
  if (pos < 0 || pos >= ring->size()) throw std::invalid_argument("unknown label position");
  return SupportIdeal(ring, ring->all_points().without(pos));
}

SupportIdeal SupportIdeal::maximal(const Ring& ring, std::string_view label) {
  return maximal(ring, ring->require_position(label));
}

SupportIdeal SupportIdeal::generated_by(const std::vector<ProdElem>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  Subset s = gens.front().ring()->no_points();
  for (const auto& g : gens) {
    if (!g.ring()->same_as(*gens.front().ring())) throw std::invalid_argument("ring mismatch");
    s = s | g.support();
  }
  return SupportIdeal(gens.front().ring(), s);
}

bool SupportIdeal::contains(const ProdElem& h) const {
  if (!ring_->same_as(*h.ring())) throw std::invalid_argument("ring mismatch");
  return h.support().subset_of(support_);
}

std::uint64_t SupportIdeal::cardinality() const {
  std::uint64_t n = 1;
  for (int pos : support_.positions()) n *= static_cast<std::uint64_t>(ring_->field(pos)->order());
  return n;
}

std::vector<ProdElem> SupportIdeal::members() const {
  Ring sub = ring_->restricted(support_);
  std::vector<ProdElem> out;
  out.reserve(sub->cardinality());
  for (std::uint64_t r = 0; r < sub->cardinality(); ++r) {
    ProdElem small = sub->element_at(r);
    std::vector<FieldElem> coords;
    coords.reserve(ring_->size());
    int j = 0;
    for (int i = 0; i < ring_->size(); ++i)
      coords.push_back(support_.contains(i) ? small.at(j++) : ring_->field(i)->zero());
    out.emplace_back(ring_, std::move(coords));
  }
  return out;
}

SupportIdeal SupportIdeal::sum(const SupportIdeal& o) const {
  if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("ring mismatch");
  return SupportIdeal(ring_, support_ | o.support_);
}

SupportIdeal SupportIdeal::intersect(const SupportIdeal& o) const {
  if (!ring_->same_as(*o.ring_)) throw std::invalid_argument("ring mismatch");
  return SupportIdeal(ring_, support_ & o.support_);
}

bool SupportIdeal::operator==(const SupportIdeal& o) const {
  return ring_->same_as(*o.ring_) && support_ == o.support_;
}

ProdElem Projection::apply(const ProdElem& f) const {
  if (!source->same_as(*f.ring())) throw std::invalid_argument("ring mismatch");
  std::vector<FieldElem> coords;
  coords.reserve(target->size());
  for (int pos : kept.positions()) coords.push_back(f.at(pos));
  return ProdElem(target, std::move(coords));
}

Projection quotient_by(const ProdElem& f) {
  Subset kept = f.support().complement();
  return Projection{f.ring(), f.ring()->restricted(kept), kept};
}

std::pair<ProdElem, ProdElem> SplitWitness::forward(const ProdElem& u) const {
  Projection to_left{joint, left, left_in_joint};
  Projection to_right{joint, right, left_in_joint.complement()};
  return {to_left.apply(u), to_right.apply(u)};
}

ProdElem SplitWitness::backward(const ProdElem& a, const ProdElem& b) const {
  std::vector<FieldElem> coords;
  coords.reserve(joint->size());
  int ia = 0, ib = 0;
  for (int i = 0; i < joint->size(); ++i)
    coords.push_back(left_in_joint.contains(i) ? a.at(ia++) : b.at(ib++));
  return ProdElem(joint, std::move(coords));
}

SplitWitness split_disjoint(const ProdElem& f, const ProdElem& g) {
  if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("ring mismatch");
  Subset sf = f.support(), sg = g.support();
  if (!(sf & sg).empty()) throw std::invalid_argument("supports overlap");
  const Ring& base = f.ring();
  SplitWitness w;
  w.joint = base->restricted(sf | sg);
  w.left = base->restricted(sf);
  w.right = base->restricted(sg);
  w.left_in_joint = Subset::none(w.joint->size());
  int j = 0;
  for (int pos : (sf | sg).positions()) {
    if (sf.contains(pos)) w.left_in_joint = w.left_in_joint.with(j);
    ++j;
  }
  return w;
}

}  // namespace lambda_lab
