#include "l0t/measure.hpp"

#include "l0t/error.hpp"

#include <algorithm>
#include <set>

namespace l0t {

MeasureSpace::MeasureSpace(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        fail(ErrorKind::Precondition, "measure space needs at least one atom");
    std::set<std::string> seen;
    Rational total(0);
    for (const Atom& a : atoms_) {
        if (a.weight <= 0)
            fail(ErrorKind::Precondition, "atom '" + a.id + "' has non-positive weight");
        if (!seen.insert(a.id).second)
            fail(ErrorKind::Precondition, "duplicate atom id '" + a.id + "'");
        total += a.weight;
    }
    total_ = total;
    prob_.reserve(atoms_.size());
    for (const Atom& a : atoms_) prob_.push_back(a.weight / total);
}

int MeasureSpace::index_of(const std::string& id) const {
    for (int k = 0; k < atom_count(); ++k)
        if (atoms_[k].id == id) return k;
    fail(ErrorKind::Reference, "unknown atom id '" + id + "'");
}

bool MeasureSpace::has_atom(const std::string& id) const {
    return std::any_of(atoms_.begin(), atoms_.end(),
                       [&](const Atom& a) { return a.id == id; });
}

bool MeasureSpace::operator==(const MeasureSpace& other) const {
    if (atoms_.size() != other.atoms_.size()) return false;
    for (size_t k = 0; k < atoms_.size(); ++k)
        if (atoms_[k].id != other.atoms_[k].id || atoms_[k].weight != other.atoms_[k].weight)
            return false;
    return true;
}

MeasureSpacePtr make_space(std::vector<Atom> atoms) {
    return std::make_shared<MeasureSpace>(std::move(atoms));
}

bool same_space(const MeasureSpacePtr& a, const MeasureSpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

L0Function::L0Function(MeasureSpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_)
        fail(ErrorKind::Precondition, "L0 function needs a space");
    if (static_cast<int>(values_.size()) != space_->atom_count())
        fail(ErrorKind::Precondition, "L0 value count does not match atom count");
}

bool L0Function::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rational& v) { return v == 0; });
}

bool L0Function::operator==(const L0Function& other) const {
    return same_space(space_, other.space_) && values_ == other.values_;
}

L0Function l0_combine(const L0Function& f, const L0Function& g, CombineOp op) {
    if (!same_space(f.space(), g.space()))
        fail(ErrorKind::Precondition, "combine over mismatched measure spaces");
    std::vector<Rational> out;
    out.reserve(f.size());
    for (int k = 0; k < f.size(); ++k) {
        const Rational &a = f.at(k), &b = g.at(k);
        switch (op) {
            case CombineOp::Add: out.push_back(a + b); break;
            case CombineOp::Sub: out.push_back(a - b); break;
            case CombineOp::Mul: out.push_back(a * b); break;
            case CombineOp::Min: out.push_back(std::min(a, b)); break;
            case CombineOp::Max: out.push_back(std::max(a, b)); break;
        }
    }
    return L0Function(f.space(), std::move(out));
}

Rational l0_distance(const L0Function& f, const L0Function& g) {
    if (!same_space(f.space(), g.space()))
        fail(ErrorKind::Precondition, "distance over mismatched measure spaces");
    const auto& w = f.space()->prob_weights();
    Rational d(0);
    for (int k = 0; k < f.size(); ++k) {
        Rational gap = abs_q(f.at(k) - g.at(k));
        d += w[k] * std::min(gap, Rational(1));
    }
    return d;
}

L0Function indicator(const MeasureSpacePtr& space, const std::vector<std::string>& atom_ids) {
    std::vector<Rational> out(space->atom_count(), Rational(0));
    for (const std::string& id : atom_ids) out[space->index_of(id)] = 1;
    return L0Function(space, std::move(out));
}

L0Function constant_function(const MeasureSpacePtr& space, const Rational& c) {
    return L0Function(space, std::vector<Rational>(space->atom_count(), c));
}

} // namespace l0t
