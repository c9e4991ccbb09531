#include "lgpot/json_io.hpp"

#include "lgpot/expr.hpp"

namespace lgpot {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string())
            throw DomainError(std::string(what) + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

ExpVec exp_from_json(const Json& j, std::size_t arity, const char* what) {
    if (!j.is_array() || j.size() != arity)
        throw DomainError(std::string(what) + " must be an array of " +
                          std::to_string(arity) + " integers");
    ExpVec e;
    e.reserve(arity);
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw DomainError(std::string(what) + " entries must be integers");
        e.push_back(v.get<std::int64_t>());
    }
    return e;
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw DomainError(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

Json poly_to_json(const LaurentPoly& f) {
    if (!f.is_exact())
        throw DomainError("cannot serialize approximate coefficients");
    Json j;
    j["vars"] = f.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : f.sorted_terms()) {
        Json t;
        t["coeff"] = c.to_string();
        t["exp"] = e;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("polynomial must be a JSON object");
    auto vars = string_list(field(j, "vars"), "vars");
    LaurentPoly f(vars);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw DomainError("terms must be an array");
    for (const auto& t : terms) {
        const Json& coeff = field(t, "coeff");
        if (!coeff.is_string()) throw DomainError("coeff must be a string");
        Scalar c = Scalar::from_string(coeff.get<std::string>());
        f.add_term(exp_from_json(field(t, "exp"), vars.size(), "exp"), c);
    }
    return f;
}

Json family_to_json(const PotentialFamily& fam) {
    Json j;
    j["W"] = poly_to_json(fam.W);
    Json higher = Json::array();
    for (const auto& p : fam.higher) higher.push_back(poly_to_json(p));
    j["higher"] = std::move(higher);
    if (!fam.divisor_label.empty()) j["divisor_label"] = fam.divisor_label;
    return j;
}

PotentialFamily family_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("family must be a JSON object");
    LaurentPoly w = poly_from_json(field(j, "W"));
    const Json& h = field(j, "higher");
    if (!h.is_array()) throw DomainError("higher must be an array");
    std::vector<LaurentPoly> higher;
    higher.reserve(h.size());
    for (const auto& p : h) higher.push_back(poly_from_json(p));
    std::string label;
    if (auto it = j.find("divisor_label"); it != j.end()) {
        if (!it->is_string()) throw DomainError("divisor_label must be a string");
        label = it->get<std::string>();
    }
    return PotentialFamily(std::move(w), std::move(higher), std::move(label));
}

Json algebra_to_json(const LocalizedAlgebra& alg) {
    Json j;
    j["gens"] = alg.gens();
    j["inverted"] = render(alg.inverted());
    if (!alg.grading().empty()) {
        Json g = Json::array();
        for (const auto& r : alg.grading()) g.push_back(r.to_string());
        j["grading"] = std::move(g);
    }
    return j;
}

LocalizedAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("algebra must be a JSON object");
    auto gens = string_list(field(j, "gens"), "gens");
    const Json& inv = field(j, "inverted");
    if (!inv.is_string()) throw DomainError("inverted must be an expression string");
    LaurentPoly s = parse_poly(inv.get<std::string>(), gens);
    std::vector<Rational> grading;
    if (auto it = j.find("grading"); it != j.end()) {
        for (const auto& g : string_list(*it, "grading"))
            grading.push_back(Rational::from_string(g));
    }
    return LocalizedAlgebra(std::move(gens), std::move(s), std::move(grading));
}

Json hom_to_json(const LocalizedAlgebra& alg, const AlgebraHom& h) {
    Json j;
    j["vars"] = h.target_vars;
    Json images = Json::object();
    for (std::size_t i = 0; i < alg.gens().size(); ++i)
        images[alg.gens()[i]] = render(h.images[i]);
    j["images"] = std::move(images);
    return j;
}

AlgebraHom hom_from_json(const LocalizedAlgebra& alg, const Json& j) {
    if (!j.is_object()) throw DomainError("hom must be a JSON object");
    auto vars = string_list(field(j, "vars"), "vars");
    const Json& images = field(j, "images");
    if (!images.is_object()) throw DomainError("images must be an object");
    AlgebraHom h;
    h.target_vars = vars;
    h.images.reserve(alg.gens().size());
    for (const auto& g : alg.gens()) {
        auto it = images.find(g);
        if (it == images.end())
            throw DomainError("missing image for generator '" + g + "'");
        if (!it->is_string())
            throw DomainError("image of '" + g + "' must be an expression string");
        h.images.push_back(parse_poly(it->get<std::string>(), vars));
    }
    if (images.size() != alg.gens().size())
        throw DomainError("images must cover exactly the generators");
    return h;
}

Json substitution_to_json(const SubstitutionMap& phi) {
    Json j;
    j["source_vars"] = phi.source_vars();
    j["target_vars"] = phi.target_vars();
    Json map = Json::object();
    for (std::size_t i = 0; i < phi.entries().size(); ++i) {
        const SubstEntry& e = phi.entries()[i];
        Json entry;
        Json mono;
        mono["coeff"] = e.mono_coeff.to_string();
        mono["exp"] = e.mono_exp;
        entry["monomial"] = std::move(mono);
        if (e.binomial) {
            if (!e.binomial->first.is_one())
                entry["binomial_coeff"] = e.binomial->first.to_string();
            entry["binomial_exp"] = e.binomial->second;
            entry["power"] = e.power;
        }
        map[phi.source_vars()[i]] = std::move(entry);
    }
    j["map"] = std::move(map);
    return j;
}

SubstitutionMap substitution_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("substitution must be a JSON object");
    auto source = string_list(field(j, "source_vars"), "source_vars");
    auto target = string_list(field(j, "target_vars"), "target_vars");
    const Json& map = field(j, "map");
    if (!map.is_object()) throw DomainError("map must be an object");
    std::vector<SubstEntry> entries;
    entries.reserve(source.size());
    for (const auto& v : source) {
        auto it = map.find(v);
        if (it == map.end())
            throw DomainError("missing substitution entry for variable '" + v + "'");
        const Json& entry = *it;
        const Json& mono = field(entry, "monomial");
        const Json& coeff = field(mono, "coeff");
        if (!coeff.is_string()) throw DomainError("monomial coeff must be a string");
        SubstEntry e;
        e.mono_coeff = Scalar::from_string(coeff.get<std::string>());
        e.mono_exp = exp_from_json(field(mono, "exp"), target.size(), "monomial exp");
        if (auto b = entry.find("binomial_exp"); b != entry.end()) {
            Scalar bc(1);
            if (auto bcf = entry.find("binomial_coeff"); bcf != entry.end()) {
                if (!bcf->is_string())
                    throw DomainError("binomial_coeff must be a string");
                bc = Scalar::from_string(bcf->get<std::string>());
            }
            e.binomial = {bc, exp_from_json(*b, target.size(), "binomial_exp")};
            const Json& p = field(entry, "power");
            if (!p.is_number_integer())
                throw DomainError("power must be an integer");
            e.power = p.get<std::int64_t>();
        } else if (entry.contains("power") &&
                   field(entry, "power").get<std::int64_t>() != 0) {
            throw DomainError("nonzero power requires binomial_exp");
        }
        entries.push_back(std::move(e));
    }
    if (map.size() != source.size())
        throw DomainError("map must cover exactly the source variables");
    return SubstitutionMap(std::move(source), std::move(target), std::move(entries));
}

} // namespace lgpot
