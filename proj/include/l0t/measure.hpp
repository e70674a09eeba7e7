#pragma once

// Finite atomic measure spaces and scalar fields over them. Values are exact
// rationals throughout; the distance integrates |f-g| truncated at 1 against
// the normalized weights, so it is itself a rational.

#include <memory>
#include <string>
#include <vector>

#include "l0t/rational.hpp"

namespace l0t {

struct Atom {
    std::string id;
    Rational weight; // strictly positive
};

class MeasureSpace {
public:
    explicit MeasureSpace(std::vector<Atom> atoms);

    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const Atom& atom(int k) const { return atoms_[k]; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Index of an atom id; throws ErrorKind::Reference when unknown.
    int index_of(const std::string& id) const;
    bool has_atom(const std::string& id) const;

    /// Normalized probability weights; they sum to 1 exactly.
    const std::vector<Rational>& prob_weights() const { return prob_; }
    const Rational& prob(int k) const { return prob_[k]; }
    const Rational& total_mass() const { return total_; }

    bool operator==(const MeasureSpace& other) const;

private:
    std::vector<Atom> atoms_;
    std::vector<Rational> prob_;
    Rational total_;
};

using MeasureSpacePtr = std::shared_ptr<const MeasureSpace>;

MeasureSpacePtr make_space(std::vector<Atom> atoms);

bool same_space(const MeasureSpacePtr& a, const MeasureSpacePtr& b);

class L0Function {
public:
    L0Function(MeasureSpacePtr space, std::vector<Rational> values);

    const MeasureSpacePtr& space() const { return space_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Rational& at(int k) const { return values_[k]; }
    const std::vector<Rational>& values() const { return values_; }

    bool is_zero() const;
    bool operator==(const L0Function& other) const;

private:
    MeasureSpacePtr space_;
    std::vector<Rational> values_;
};

enum class CombineOp { Add, Sub, Mul, Min, Max };

L0Function l0_combine(const L0Function& f, const L0Function& g, CombineOp op);

/// Sum_k w~_k * min(|f_k - g_k|, 1), the complete metric of the scalar ring.
Rational l0_distance(const L0Function& f, const L0Function& g);

L0Function indicator(const MeasureSpacePtr& space, const std::vector<std::string>& atom_ids);

L0Function constant_function(const MeasureSpacePtr& space, const Rational& c);

} // namespace l0t
