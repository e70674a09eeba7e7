#include "l0t/document.hpp"

#include "l0t/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace l0t {

namespace {

using Json = nlohmann::json;

const Json& need(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        fail(ErrorKind::Parse, where + ": missing field '" + key + "'");
    return *it;
}

std::string need_str(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_string())
        fail(ErrorKind::Parse, where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

int need_int(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer())
        fail(ErrorKind::Parse, where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

Rational rat(const Json& v, const std::string& where) {
    if (!v.is_string())
        fail(ErrorKind::Parse, where + ": rationals are \"p/q\" strings");
    return parse_rational(v.get<std::string>());
}

VecQ parse_vec(const Json& arr, const std::string& where) {
    if (!arr.is_array())
        fail(ErrorKind::Parse, where + ": expected an array of rationals");
    VecQ v(static_cast<int>(arr.size()));
    int i = 0;
    for (const Json& e : arr) v[i++] = rat(e, where);
    return v;
}

MatQ parse_mat(const Json& rows, const std::string& where) {
    if (!rows.is_array() || rows.empty())
        fail(ErrorKind::Parse, where + ": expected a nonempty array of rows");
    std::vector<VecQ> r;
    for (const Json& row : rows) r.push_back(parse_vec(row, where));
    MatQ m(static_cast<int>(r.size()), static_cast<int>(r[0].size()));
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i].size() != r[0].size())
            fail(ErrorKind::Parse, where + ": ragged matrix rows");
    for (int i = 0; i < m.rows(); ++i) m.row(i) = r[i].transpose();
    return m;
}

std::vector<MatQ> parse_mats(const Json& arr, const std::string& where) {
    if (!arr.is_array())
        fail(ErrorKind::Parse, where + ": expected an array of matrices");
    std::vector<MatQ> ms;
    for (const Json& m : arr) ms.push_back(parse_mat(m, where));
    return ms;
}

void check_keys(const Json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            fail(ErrorKind::Parse, where + ": unknown field '" + it.key() + "'");
}

template <typename T>
const T& lookup(const std::map<std::string, T>& section, const std::string& id,
                const char* what) {
    auto it = section.find(id);
    if (it == section.end())
        fail(ErrorKind::Reference, std::string("unknown ") + what + " '" + id + "'");
    return it->second;
}

// Sections an assertion may reference, per type; validated at parse time so
// a document either resolves completely or is rejected as input.
enum class Sec { Space, Module, Element, Hom, Form, Tensor, Map, Family };

struct RefField {
    const char* field;
    Sec sec;
    bool list;
};

const std::map<std::string, std::vector<RefField>>& assertion_refs() {
    static const std::map<std::string, std::vector<RefField>> table = {
        {"norm", {{"element", Sec::Element, false}}},
        {"tensor_norm", {{"tensor", Sec::Tensor, false}}},
        {"hs_sq", {{"tensor", Sec::Tensor, false}}},
        {"null", {{"tensor", Sec::Tensor, false}}},
        {"sandwich", {{"tensor", Sec::Tensor, false}}},
        {"pi_dual", {{"tensor", Sec::Tensor, false}}},
        {"hom_tensor_bound",
         {{"left_hom", Sec::Hom, false},
          {"right_hom", Sec::Hom, false},
          {"tensor", Sec::Tensor, false}}},
        {"quotient", {{"hom", Sec::Hom, false}}},
        {"uc_quot", {{"hom", Sec::Hom, false}}},
        {"vv", {{"tensor", Sec::Tensor, false}}},
        {"sphere_quot", {{"generators", Sec::Element, true}}},
        {"diag", {{"space", Sec::Space, false}}},
        {"uc_eps", {{"tensor", Sec::Tensor, false}}},
        {"pull_norm", {{"map", Sec::Map, false}, {"tensor", Sec::Tensor, false}}},
        {"hb", {{"element", Sec::Element, false}}},
        {"annih", {{"module", Sec::Module, false}, {"generators", Sec::Element, true}}},
        {"summable", {{"family", Sec::Family, false}}},
        {"sum", {{"family", Sec::Family, false}, {"expected", Sec::Element, false}}},
        {"sum_hom", {{"family", Sec::Family, false}, {"hom", Sec::Hom, false}}},
        {"curry_norm", {{"form", Sec::Form, false}}},
        {"elem_equal", {{"a", Sec::Element, false}, {"b", Sec::Element, false}}},
    };
    return table;
}

// Non-reference fields each assertion type may carry beyond name/type.
const std::map<std::string, std::set<std::string>>& assertion_extras() {
    static const std::map<std::string, std::set<std::string>> table = {
        {"norm", {"expected", "tol"}},
        {"tensor_norm", {"flavor", "expected", "tol"}},
        {"hs_sq", {"expected"}},
        {"null", {"expected"}},
        {"sandwich", {}},
        {"pi_dual", {}},
        {"hom_tensor_bound", {"flavor"}},
        {"quotient", {"expected"}},
        {"uc_quot", {"points"}},
        {"vv", {}},
        {"sphere_quot", {"expected"}},
        {"diag", {"values"}},
        {"uc_eps", {}},
        {"pull_norm", {"flavor"}},
        {"hb", {}},
        {"annih", {}},
        {"summable", {"horizon", "expected"}},
        {"sum", {"tol"}},
        {"sum_hom", {"tol"}},
        {"curry_norm", {}},
        {"elem_equal", {"expected"}},
    };
    return table;
}

void require_section(const WorkDocument& doc, Sec sec, const std::string& id,
                     const std::string& where) {
    bool found = false;
    switch (sec) {
    case Sec::Space: found = doc.spaces.count(id); break;
    case Sec::Module: found = doc.modules.count(id); break;
    case Sec::Element: found = doc.elements.count(id); break;
    case Sec::Hom: found = doc.homs.count(id); break;
    case Sec::Form: found = doc.forms.count(id); break;
    case Sec::Tensor: found = doc.tensors.count(id); break;
    case Sec::Map: found = doc.atom_maps.count(id); break;
    case Sec::Family: found = doc.families.count(id); break;
    }
    if (!found)
        fail(ErrorKind::Reference, where + ": unresolved reference '" + id + "'");
}

void validate_assertion(const WorkDocument& doc, const Json& a, const std::string& where) {
    const std::string type = need_str(a, "type", where);
    auto refs = assertion_refs().find(type);
    if (refs == assertion_refs().end())
        fail(ErrorKind::Parse, where + ": unknown assertion type '" + type + "'");

    std::set<std::string> allowed{"name", "type"};
    for (const RefField& r : refs->second) allowed.insert(r.field);
    const auto& extras = assertion_extras().at(type);
    allowed.insert(extras.begin(), extras.end());
    check_keys(a, allowed, where);

    for (const RefField& r : refs->second) {
        const Json& v = need(a, r.field, where);
        if (r.list) {
            if (!v.is_array())
                fail(ErrorKind::Parse, where + ": field '" + std::string(r.field) +
                                           "' must be an array of ids");
            for (const Json& e : v) {
                if (!e.is_string())
                    fail(ErrorKind::Parse, where + ": ids must be strings");
                require_section(doc, r.sec, e.get<std::string>(), where);
            }
        } else {
            if (!v.is_string())
                fail(ErrorKind::Parse, where + ": field '" + std::string(r.field) +
                                           "' must be an id string");
            require_section(doc, r.sec, v.get<std::string>(), where);
        }
    }
}

NormDescriptor parse_descriptor(const Json& n, const std::string& where) {
    const std::string kind = need_str(n, "kind", where);
    if (kind == "poly") {
        check_keys(n, {"id", "kind", "primal", "dual"}, where);
        std::vector<VecQ> primal, dual;
        for (const Json& v : need(n, "primal", where)) primal.push_back(parse_vec(v, where));
        for (const Json& v : need(n, "dual", where)) dual.push_back(parse_vec(v, where));
        return NormDescriptor::poly(std::move(primal), std::move(dual));
    }
    NormKind k;
    if (kind == "l1") k = NormKind::L1;
    else if (kind == "l2") k = NormKind::L2;
    else if (kind == "linf") k = NormKind::Linf;
    else fail(ErrorKind::Parse, where + ": unknown norm kind '" + kind + "'");
    check_keys(n, {"id", "kind", "dim", "weights"}, where);
    const int dim = need_int(n, "dim", where);
    std::vector<Rational> weights;
    if (n.contains("weights"))
        for (const Json& w : n.at("weights")) weights.push_back(rat(w, where));
    return NormDescriptor::lp(k, dim, std::move(weights));
}

CountableFamily parse_family(const WorkDocument& doc, const Json& f,
                             const std::string& where) {
    const std::string kind = need_str(f, "kind", where);
    if (kind == "geometric") {
        check_keys(f, {"id", "kind", "base", "ratio"}, where);
        const Element& base = lookup(doc.elements, need_str(f, "base", where), "element");
        return geometric_family(base, rat(need(f, "ratio", where), where));
    }
    if (kind == "p_series") {
        check_keys(f, {"id", "kind", "base", "p"}, where);
        const Element& base = lookup(doc.elements, need_str(f, "base", where), "element");
        return p_series_family(base, need_int(f, "p", where));
    }
    if (kind == "finite") {
        check_keys(f, {"id", "kind", "terms"}, where);
        std::vector<Element> terms;
        for (const Json& t : need(f, "terms", where)) {
            if (!t.is_string())
                fail(ErrorKind::Parse, where + ": terms must be element ids");
            terms.push_back(lookup(doc.elements, t.get<std::string>(), "element"));
        }
        return finite_family(terms);
    }
    if (kind == "scalar_geometric") {
        check_keys(f, {"id", "kind", "space", "ratios"}, where);
        const MeasureSpacePtr& space =
            lookup(doc.spaces, need_str(f, "space", where), "space");
        std::vector<Rational> ratios;
        for (const Json& r : need(f, "ratios", where)) ratios.push_back(rat(r, where));
        return scalar_geometric_family(space, ratios);
    }
    if (kind == "harmonic") {
        check_keys(f, {"id", "kind", "space"}, where);
        const MeasureSpacePtr& space =
            lookup(doc.spaces, need_str(f, "space", where), "space");
        CountableFamily fam;
        fam.module = scalar_module(space);
        ModuleSpecPtr mod = fam.module;
        fam.generator = [mod](int n) {
            std::vector<VecQ> vecs;
            for (int k = 0; k < mod->atom_count(); ++k) {
                VecQ v(1);
                v[0] = Rational(1, n);
                vecs.push_back(v);
            }
            return Element(mod, std::move(vecs));
        };
        fam.tails.assign(space->atom_count(), TailBound::divergent());
        return fam;
    }
    fail(ErrorKind::Parse, where + ": unknown family kind '" + kind + "'");
}

// ---- assertion runner ----------------------------------------------------

std::vector<Rational> expected_list(const Json& a, const char* field, int count,
                                    const std::string& where) {
    const Json& arr = need(a, field, where);
    if (!arr.is_array() || static_cast<int>(arr.size()) != count)
        fail(ErrorKind::Parse,
             where + ": '" + field + "' needs one rational per atom (" +
                 std::to_string(count) + ")");
    std::vector<Rational> out;
    for (const Json& e : arr) out.push_back(rat(e, where));
    return out;
}

double opt_tol(const Json& a, const std::string& where) {
    if (!a.contains("tol")) return 0.0;
    const Json& t = a.at("tol");
    if (!t.is_number())
        fail(ErrorKind::Parse, where + ": 'tol' must be a number");
    double v = t.get<double>();
    if (v < 0) fail(ErrorKind::Parse, where + ": 'tol' must be nonnegative");
    return v;
}

bool opt_flag(const Json& a, const char* field, bool fallback, const std::string& where) {
    if (!a.contains(field)) return fallback;
    const Json& v = a.at(field);
    if (!v.is_boolean())
        fail(ErrorKind::Parse, where + ": '" + field + "' must be a boolean");
    return v.get<bool>();
}

TensorFlavor parse_flavor(const Json& a, const std::string& where) {
    const std::string f = need_str(a, "flavor", where);
    if (f == "pi") return TensorFlavor::Pi;
    if (f == "eps") return TensorFlavor::Eps;
    fail(ErrorKind::Parse, where + ": flavor must be \"pi\" or \"eps\"");
}

AssertionOutcome norm_values_match(const NormFunction& got,
                                   const std::vector<Rational>& want, double tol) {
    for (size_t k = 0; k < got.values.size(); ++k) {
        if (!nv_equal(got.values[k], NormValue::from_exact(want[k]), tol)) {
            return {false, "atom " + got.space->atom(static_cast<int>(k)).id + ": got " +
                               format_norm_value(got.values[k]) + " expected " +
                               format_rational(want[k])};
        }
    }
    return {true, ""};
}

AssertionOutcome run_typed(const WorkDocument& doc, const std::string& type,
                           const Json& a, const std::string& where) {
    if (type == "norm") {
        const Element& v = lookup(doc.elements, need_str(a, "element", where), "element");
        NormFunction n = pointwise_norm(v);
        auto want = expected_list(a, "expected", v.module()->atom_count(), where);
        return norm_values_match(n, want, opt_tol(a, where));
    }
    if (type == "tensor_norm") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        TensorFlavor flavor = parse_flavor(a, where);
        NormFunction n = flavor == TensorFlavor::Pi ? projective_norm(t).norms()
                                                    : injective_norm(t);
        auto want = expected_list(a, "expected", t.left->atom_count(), where);
        return norm_values_match(n, want, opt_tol(a, where));
    }
    if (type == "hs_sq") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        L0Function h = hs_norm_squared(t);
        auto want = expected_list(a, "expected", t.left->atom_count(), where);
        for (int k = 0; k < t.left->atom_count(); ++k)
            if (h.at(k) != want[k])
                return {false, "atom " + t.left->space()->atom(k).id + ": got " +
                                   format_rational(h.at(k)) + " expected " +
                                   format_rational(want[k])};
        return {true, ""};
    }
    if (type == "null") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        bool want = opt_flag(a, "expected", true, where);
        if (is_null(t) != want)
            return {false, std::string("matrix verdict ") + (is_null(t) ? "null" : "nonnull")};
        if (!null_criterion_agrees(t))
            return {false, "dual-pair criterion disagrees with the matrix verdict"};
        return {true, ""};
    }
    if (type == "sandwich") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        std::string report;
        bool ok = crossnorm_sandwich_check(t, &report);
        return {ok, ok ? "" : report};
    }
    if (type == "pi_dual") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        PiResult r = projective_norm(t);
        std::vector<MatQ> certs;
        for (int k = 0; k < t.left->atom_count(); ++k) {
            if (r.atoms[k].route == PiRoute::Vertex && r.atoms[k].dual_certificate.size() > 0)
                certs.push_back(r.atoms[k].dual_certificate);
            else
                certs.push_back(MatQ::Zero(t.left->dim(k), t.right->dim(k)));
        }
        BilinearForm b = make_bilinear(t.left, t.right, std::move(certs));
        NormFunction bn = bilinear_norm(b);
        L0Function attained = pairing_with_bilinear(b, t);
        for (int k = 0; k < t.left->atom_count(); ++k) {
            if (!nv_less_equal(bn.values[k], NormValue::from_exact(Rational(1))))
                return {false, "certificate exceeds the dual disc at atom " +
                                   t.left->space()->atom(k).id};
            if (r.atoms[k].route != PiRoute::Vertex) continue;
            if (!r.atoms[k].value.exact || abs_q(attained.at(k)) != *r.atoms[k].value.exact)
                return {false, "certificate does not attain the norm at atom " +
                                   t.left->space()->atom(k).id};
        }
        return {true, ""};
    }
    if (type == "hom_tensor_bound") {
        const Homomorphism& T = lookup(doc.homs, need_str(a, "left_hom", where), "hom");
        const Homomorphism& S = lookup(doc.homs, need_str(a, "right_hom", where), "hom");
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        TensorFlavor flavor = parse_flavor(a, where);
        Tensor image = tensor_of_homs(T, S, t, flavor);
        auto norm_of = [&](const Tensor& x) {
            return flavor == TensorFlavor::Pi ? projective_norm(x).norms()
                                              : injective_norm(x);
        };
        NormFunction ni = norm_of(image), nt = norm_of(t);
        NormFunction nT = hom_pointwise_norm(T), nS = hom_pointwise_norm(S);
        for (int k = 0; k < t.left->atom_count(); ++k) {
            NormValue bound = nv_mul(nv_mul(nT.values[k], nS.values[k]), nt.values[k]);
            if (!nv_less_equal(ni.values[k], bound))
                return {false, "operator bound violated at atom " +
                                   t.left->space()->atom(k).id + ": " +
                                   format_norm_value(ni.values[k]) + " > " +
                                   format_norm_value(bound)};
        }
        return {true, ""};
    }
    if (type == "quotient") {
        const Homomorphism& T = lookup(doc.homs, need_str(a, "hom", where), "hom");
        bool want = opt_flag(a, "expected", true, where);
        QuotientOperatorReport rep = is_quotient_operator(T);
        return {rep.verdict == want, rep.verdict == want ? "" : rep.reason};
    }
    if (type == "uc_quot") {
        const Homomorphism& T = lookup(doc.homs, need_str(a, "hom", where), "hom");
        std::vector<std::string> pts;
        for (const Json& p : need(a, "points", where)) {
            if (!p.is_string()) fail(ErrorKind::Parse, where + ": points must be strings");
            pts.push_back(p.get<std::string>());
        }
        bool ok = uc_quotient_tensor_check(T, make_points(pts));
        return {ok, ok ? "" : "a target vertex fails the unit min-preimage test"};
    }
    if (type == "vv") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        bool ok = vv_iso_check(t).equal;
        return {ok, ok ? "" : "projective norm differs from the row-norm sum"};
    }
    if (type == "sphere_quot") {
        std::vector<Element> gens;
        for (const Json& g : need(a, "generators", where))
            gens.push_back(lookup(doc.elements, g.get<std::string>(), "element"));
        bool want = opt_flag(a, "expected", true, where);
        bool got = sphere_quotient(gens).verdict;
        return {got == want, got == want ? "" : "generator hull mismatch"};
    }
    if (type == "diag") {
        const MeasureSpacePtr& space =
            lookup(doc.spaces, need_str(a, "space", where), "space");
        std::vector<L0Function> fs;
        for (const Json& row : need(a, "values", where)) {
            std::vector<Rational> vals;
            for (const Json& e : row) vals.push_back(rat(e, where));
            fs.push_back(L0Function(space, std::move(vals)));
        }
        bool ok = diagonal_check(fs);
        return {ok, ok ? "" : "diagonal norms differ from the scalar sums"};
    }
    if (type == "uc_eps") {
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        bool ok = inj_tens_uc_check(t);
        return {ok, ok ? "" : "injective norm differs from the max row norm"};
    }
    if (type == "pull_norm") {
        const AtomMap& phi = lookup(doc.atom_maps, need_str(a, "map", where), "atom map");
        const Tensor& t = lookup(doc.tensors, need_str(a, "tensor", where), "tensor");
        bool ok = pullback_tensor_check(phi, t, parse_flavor(a, where));
        return {ok, ok ? "" : "norm does not transport along the map"};
    }
    if (type == "hb") {
        const Element& v = lookup(doc.elements, need_str(a, "element", where), "element");
        Element w = hahn_banach_witness(v);
        NormFunction nv = pointwise_norm(v);
        NormFunction nw = pointwise_norm(w);
        L0Function attained = pairing(w, v);
        // Exact equality on exact routes; the l2 witness carries float
        // division, so its faces are only certified to 1e-9.
        for (int k = 0; k < v.module()->atom_count(); ++k) {
            const NormValue& nvk = nv.values[k];
            const NormValue& nwk = nw.values[k];
            if (nvk.exact && *nvk.exact == 0) continue;
            bool sphere = nwk.exact ? *nwk.exact == 1
                                    : std::abs(nwk.value - 1.0) <= 1e-9 + nwk.tol;
            if (!sphere)
                return {false, "witness off the dual sphere at atom " +
                                   v.module()->space()->atom(k).id};
            bool attains = nvk.exact
                               ? attained.at(k) == *nvk.exact
                               : std::abs(to_double(attained.at(k)) - nvk.value) <=
                                     1e-9 + nvk.tol;
            if (!attains)
                return {false, "witness does not attain the norm at atom " +
                                   v.module()->space()->atom(k).id};
        }
        return {true, ""};
    }
    if (type == "annih") {
        const ModuleSpecPtr& M = lookup(doc.modules, need_str(a, "module", where), "module");
        std::vector<Element> gens;
        for (const Json& g : need(a, "generators", where))
            gens.push_back(lookup(doc.elements, g.get<std::string>(), "element"));
        Submodule V = span_submodule(M, gens);
        bool ok = quotient_dual_check(V);
        return {ok, ok ? "" : "restriction and coset norms disagree"};
    }
    if (type == "summable") {
        const CountableFamily& fam =
            lookup(doc.families, need_str(a, "family", where), "family");
        const int horizon = need_int(a, "horizon", where);
        const Json& exp = need(a, "expected", where);
        auto verdicts = cauchy_check(fam, horizon);
        if (!exp.is_array() || exp.size() != verdicts.size())
            fail(ErrorKind::Parse, where + ": 'expected' needs one verdict per atom");
        for (size_t k = 0; k < verdicts.size(); ++k) {
            const std::string want = exp[k].get<std::string>();
            std::string got = verdicts[k] == SummVerdict::Summable      ? "summable"
                              : verdicts[k] == SummVerdict::NotSummable ? "not_summable"
                                                                        : "unknown";
            if (want != "summable" && want != "not_summable" && want != "unknown")
                fail(ErrorKind::Parse, where + ": unknown verdict '" + want + "'");
            if (got != want)
                return {false, "atom " + fam.module->space()->atom(static_cast<int>(k)).id +
                                   ": got " + got + " expected " + want};
        }
        return {true, ""};
    }
    if (type == "sum") {
        const CountableFamily& fam =
            lookup(doc.families, need_str(a, "family", where), "family");
        const Element& want = lookup(doc.elements, need_str(a, "expected", where), "element");
        Rational tol = rat(need(a, "tol", where), where);
        SumResult s = family_sum(fam, tol);
        NormFunction gap = pointwise_norm(elem_sub(s.value, want));
        for (int k = 0; k < fam.module->atom_count(); ++k)
            if (!nv_less_equal(gap.values[k], NormValue::from_exact(s.error[k])))
                return {false, "sum misses the declared limit at atom " +
                                   fam.module->space()->atom(k).id + " by " +
                                   format_norm_value(gap.values[k])};
        return {true, ""};
    }
    if (type == "sum_hom") {
        const CountableFamily& fam =
            lookup(doc.families, need_str(a, "family", where), "family");
        const Homomorphism& T = lookup(doc.homs, need_str(a, "hom", where), "hom");
        Rational tol = rat(need(a, "tol", where), where);
        bool ok = hom_commute_check(fam, T, tol);
        return {ok, ok ? "" : "operator image of the sum drifts off the summed image"};
    }
    if (type == "curry_norm") {
        const BilinearForm& b = lookup(doc.forms, need_str(a, "form", where), "form");
        NormFunction nb = bilinear_norm(b);
        NormFunction nc = hom_pointwise_norm(curry(b));
        for (size_t k = 0; k < nb.values.size(); ++k)
            if (!nv_equal(nb.values[k], nc.values[k], 1e-9))
                return {false, "curried norm differs at atom " +
                                   b.left->space()->atom(static_cast<int>(k)).id + ": " +
                                   format_norm_value(nc.values[k]) + " vs " +
                                   format_norm_value(nb.values[k])};
        return {true, ""};
    }
    if (type == "elem_equal") {
        const Element& x = lookup(doc.elements, need_str(a, "a", where), "element");
        const Element& y = lookup(doc.elements, need_str(a, "b", where), "element");
        bool want = opt_flag(a, "expected", true, where);
        bool got = elem_equal(x, y);
        return {got == want, got == want ? "" : "element comparison mismatch"};
    }
    fail(ErrorKind::Parse, where + ": unknown assertion type '" + type + "'");
}

} // namespace

WorkDocument parse_document(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::Parse, e.what());
    }
    if (!root.is_object())
        fail(ErrorKind::Parse, "document root must be an object");
    check_keys(root,
               {"version", "spaces", "norms", "modules", "elements", "homs", "forms",
                "tensors", "atom_maps", "families", "assertions"},
               "document");

    WorkDocument doc;
    doc.version = need_str(root, "version", "document");
    if (doc.version != "1")
        fail(ErrorKind::Parse, "unsupported document version '" + doc.version + "'");

    auto section = [&](const char* key) -> Json {
        return root.contains(key) ? root.at(key) : Json::array();
    };
    auto ident = [&](const Json& obj, const char* kind, size_t i) {
        std::string where = std::string(kind) + "[" + std::to_string(i) + "]";
        if (!obj.is_object()) fail(ErrorKind::Parse, where + ": expected an object");
        return std::make_pair(need_str(obj, "id", where),
                              std::string(kind) + " '" + need_str(obj, "id", where) + "'");
    };

    size_t i = 0;
    for (const Json& s : section("spaces")) {
        auto [id, where] = ident(s, "space", i++);
        check_keys(s, {"id", "atoms"}, where);
        std::vector<Atom> atoms;
        for (const Json& a : need(s, "atoms", where)) {
            check_keys(a, {"id", "mass"}, where);
            atoms.push_back({need_str(a, "id", where), rat(need(a, "mass", where), where)});
        }
        if (!doc.spaces.emplace(id, make_space(std::move(atoms))).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& n : section("norms")) {
        auto [id, where] = ident(n, "norm", i++);
        if (!doc.norms.emplace(id, parse_descriptor(n, where)).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& m : section("modules")) {
        auto [id, where] = ident(m, "module", i++);
        check_keys(m, {"id", "space", "fibers"}, where);
        const MeasureSpacePtr& space =
            lookup(doc.spaces, need_str(m, "space", where), "space");
        std::vector<NormDescriptor> fibers;
        for (const Json& f : need(m, "fibers", where)) {
            if (!f.is_string()) fail(ErrorKind::Parse, where + ": fibers are norm ids");
            fibers.push_back(lookup(doc.norms, f.get<std::string>(), "norm"));
        }
        if (static_cast<int>(fibers.size()) != space->atom_count())
            fail(ErrorKind::Parse, where + ": one fiber per atom required");
        if (!doc.modules.emplace(id, make_module(space, std::move(fibers))).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& e : section("elements")) {
        auto [id, where] = ident(e, "element", i++);
        check_keys(e, {"id", "module", "vectors"}, where);
        const ModuleSpecPtr& M = lookup(doc.modules, need_str(e, "module", where), "module");
        std::vector<VecQ> vecs;
        for (const Json& v : need(e, "vectors", where)) vecs.push_back(parse_vec(v, where));
        if (!doc.elements.emplace(id, Element(M, std::move(vecs))).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& h : section("homs")) {
        auto [id, where] = ident(h, "hom", i++);
        check_keys(h, {"id", "source", "target", "matrices"}, where);
        const ModuleSpecPtr& src = lookup(doc.modules, need_str(h, "source", where), "module");
        const ModuleSpecPtr& tgt = lookup(doc.modules, need_str(h, "target", where), "module");
        if (!doc.homs.emplace(id, make_hom(src, tgt, parse_mats(need(h, "matrices", where), where)))
                 .second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& f : section("forms")) {
        auto [id, where] = ident(f, "form", i++);
        check_keys(f, {"id", "left", "right", "matrices"}, where);
        const ModuleSpecPtr& left = lookup(doc.modules, need_str(f, "left", where), "module");
        const ModuleSpecPtr& right = lookup(doc.modules, need_str(f, "right", where), "module");
        if (!doc.forms
                 .emplace(id, make_bilinear(left, right,
                                            parse_mats(need(f, "matrices", where), where)))
                 .second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& t : section("tensors")) {
        auto [id, where] = ident(t, "tensor", i++);
        check_keys(t, {"id", "left", "right", "matrices", "pairs"}, where);
        const ModuleSpecPtr& left = lookup(doc.modules, need_str(t, "left", where), "module");
        const ModuleSpecPtr& right = lookup(doc.modules, need_str(t, "right", where), "module");
        if (t.contains("matrices") == t.contains("pairs"))
            fail(ErrorKind::Parse, where + ": exactly one of 'matrices' or 'pairs'");
        Tensor tensor = [&] {
            if (t.contains("matrices"))
                return make_tensor(left, right, parse_mats(t.at("matrices"), where));
            Representation rep;
            for (const Json& p : t.at("pairs")) {
                if (!p.is_array() || p.size() != 2)
                    fail(ErrorKind::Parse, where + ": pairs are [element, element]");
                rep.emplace_back(lookup(doc.elements, p[0].get<std::string>(), "element"),
                                 lookup(doc.elements, p[1].get<std::string>(), "element"));
            }
            Tensor built = from_representation(rep);
            if (!same_module(built.left, left) || !same_module(built.right, right))
                fail(ErrorKind::Parse, where + ": pairs live in different modules");
            return built;
        }();
        if (!doc.tensors.emplace(id, std::move(tensor)).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& m : section("atom_maps")) {
        auto [id, where] = ident(m, "atom_map", i++);
        check_keys(m, {"id", "source", "target", "pairs"}, where);
        const MeasureSpacePtr& src = lookup(doc.spaces, need_str(m, "source", where), "space");
        const MeasureSpacePtr& tgt = lookup(doc.spaces, need_str(m, "target", where), "space");
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const Json& p : need(m, "pairs", where)) {
            if (!p.is_array() || p.size() != 2)
                fail(ErrorKind::Parse, where + ": pairs are [source_atom, target_atom]");
            pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        if (!doc.atom_maps.emplace(id, make_atom_map(src, tgt, pairs)).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& f : section("families")) {
        auto [id, where] = ident(f, "family", i++);
        if (!doc.families.emplace(id, parse_family(doc, f, where)).second)
            fail(ErrorKind::Parse, "duplicate " + where);
    }

    i = 0;
    for (const Json& a : section("assertions")) {
        std::string where = "assertion[" + std::to_string(i++) + "]";
        if (!a.is_object()) fail(ErrorKind::Parse, where + ": expected an object");
        Assertion as;
        as.name = need_str(a, "name", where);
        as.type = need_str(a, "type", where);
        validate_assertion(doc, a, "assertion '" + as.name + "'");
        as.payload = a.dump();
        doc.assertions.push_back(std::move(as));
    }

    return doc;
}

AssertionOutcome run_assertion(const WorkDocument& doc, const Assertion& a) {
    Json payload;
    try {
        payload = Json::parse(a.payload);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::Internal, std::string("assertion payload corrupted: ") + e.what());
    }
    return run_typed(doc, a.type, payload, "assertion '" + a.name + "'");
}

const Element& doc_element(const WorkDocument& doc, const std::string& id) {
    return lookup(doc.elements, id, "element");
}

const Tensor& doc_tensor(const WorkDocument& doc, const std::string& id) {
    return lookup(doc.tensors, id, "tensor");
}

std::string format_norm_value(const NormValue& v) {
    if (v.exact) return format_rational(*v.exact);
    if (v.exact_sq) return "sqrt(" + format_rational(*v.exact_sq) + ")";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f (tol %.1e)", v.value, v.tol);
    return buf;
}

} // namespace l0t
