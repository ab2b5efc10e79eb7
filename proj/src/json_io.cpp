#include "soergel/json_io.hpp"

#include <cstdlib>
#include <limits>
#include <filesystem>
#include <fstream>

namespace soergel {

namespace {

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SoergelError("expected an integer (number or decimal string)");
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

} // namespace

json descriptor_to_json(const CoefDescriptor& d) {
    json j;
    switch (d.kind()) {
    case CoefKind::integers: j["kind"] = "integers"; break;
    case CoefKind::prime_field:
        j["kind"] = "prime_field";
        j["p"] = int_to_json(d.p());
        break;
    case CoefKind::quotient: {
        j["kind"] = "quotient";
        json mod = json::array();
        for (const Int& c : d.modulus()) mod.push_back(int_to_json(c));
        j["modulus"] = mod;
        break;
    }
    case CoefKind::bivariate_integers: j["kind"] = "bivariate_integers"; break;
    }
    return j;
}

DescrPtr descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw SoergelError("coef: object with \"kind\" required");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return CoefDescriptor::integers();
    if (kind == "prime_field") return CoefDescriptor::prime_field(int_from_json(j.at("p")));
    if (kind == "quotient") {
        std::vector<Int> mod;
        for (const json& c : j.at("modulus")) mod.push_back(int_from_json(c));
        return CoefDescriptor::quotient(std::move(mod));
    }
    if (kind == "bivariate_integers") return CoefDescriptor::bivariate();
    throw SoergelError("unknown coef kind '" + kind + "'");
}

json coef_to_json(const CoefElem& c) {
    switch (c.descriptor()->kind()) {
    case CoefKind::integers:
    case CoefKind::prime_field: return int_to_json(c.as_int());
    case CoefKind::quotient: {
        json arr = json::array();
        for (const Int& v : c.as_coords()) arr.push_back(int_to_json(v));
        return arr;
    }
    case CoefKind::bivariate_integers: {
        json arr = json::array();
        for (const auto& t : c.as_bipoly().terms())
            arr.push_back(json::array({t.ex, t.ey, int_to_json(t.c)}));
        return arr;
    }
    }
    throw InternalError("bad kind");
}

CoefElem coef_from_json(const DescrPtr& d, const json& j) {
    if (j.is_number_integer() || j.is_string()) return CoefElem::from_int(d, int_from_json(j));
    if (!j.is_array()) throw SoergelError("coef element: integer or array required");
    switch (d->kind()) {
    case CoefKind::integers:
    case CoefKind::prime_field:
        throw SoergelError("coef element: plain integer required for this ring");
    case CoefKind::quotient: {
        std::vector<Int> coords;
        for (const json& c : j) coords.push_back(int_from_json(c));
        return CoefElem::from_coords(d, std::move(coords));
    }
    case CoefKind::bivariate_integers: {
        BiPoly p;
        for (const json& t : j) {
            if (!t.is_array() || t.size() != 3)
                throw SoergelError("bivariate element: [ex, ey, c] triples required");
            p = p + BiPoly::monomial(t[0].get<int>(), t[1].get<int>(), int_from_json(t[2]));
        }
        return CoefElem::from_bipoly(d, std::move(p));
    }
    }
    throw InternalError("bad kind");
}

RealizationConfig realization_config_from_json(const json& j, const std::string& name) {
    RealizationConfig cfg;
    cfg.name = name;
    if (j.contains("name") && name.empty()) cfg.name = j.at("name").get<std::string>();
    const json& jm = j.at("m");
    if (jm.is_string()) {
        if (jm.get<std::string>() != "universal") throw SoergelError("m: integer or \"universal\"");
        cfg.m = 0;
    } else {
        cfg.m = jm.get<int>();
        if (cfg.m < 2) throw SoergelError("m must be >= 2 or universal");
    }
    if (cfg.m == 0 && !j.contains("coef")) return cfg; // universal: everything forced
    cfg.coef = descriptor_from_json(j.at("coef"));
    cfg.rank = j.at("rank").get<int>();
    auto vec = [&](const char* field) {
        std::vector<CoefElem> v;
        for (const json& c : j.at(field)) v.push_back(coef_from_json(cfg.coef, c));
        return v;
    };
    cfg.alpha_s = vec("alpha_s");
    cfg.alpha_t = vec("alpha_t");
    cfg.covector_s = vec("covector_s");
    cfg.covector_t = vec("covector_t");
    if (j.contains("delta_s")) cfg.delta_s = vec("delta_s");
    if (j.contains("delta_t")) cfg.delta_t = vec("delta_t");
    return cfg;
}

json realization_to_json(const Realization& r) {
    json j;
    if (r.is_universal()) {
        j["m"] = "universal";
        return j;
    }
    j["m"] = r.m;
    j["coef"] = descriptor_to_json(*r.coef);
    j["rank"] = r.rank;
    auto vec = [&](const std::vector<CoefElem>& v) {
        json arr = json::array();
        for (const CoefElem& c : v) arr.push_back(coef_to_json(c));
        return arr;
    };
    j["alpha_s"] = vec(r.alpha_s);
    j["alpha_t"] = vec(r.alpha_t);
    j["covector_s"] = vec(r.covector_s);
    j["covector_t"] = vec(r.covector_t);
    if (r.delta_s) j["delta_s"] = vec(*r.delta_s);
    if (r.delta_t) j["delta_t"] = vec(*r.delta_t);
    return j;
}

json rpoly_to_json(const RPoly& p) {
    json arr = json::array();
    for (const auto& t : p.terms()) {
        json e = json::array();
        for (int k : t.exps) e.push_back(k);
        arr.push_back(json::array({e, coef_to_json(t.c)}));
    }
    return arr;
}

RPoly rpoly_from_json(const Realization& r, const json& j) {
    if (!j.is_array()) throw SoergelError("rpoly: array of [exps, coef] required");
    RPoly out = RPoly::zero(r.rank, r.coef);
    for (const json& term : j) {
        if (!term.is_array() || term.size() != 2) throw SoergelError("rpoly term: [exps, coef]");
        std::vector<int> exps;
        for (const json& e : term[0]) exps.push_back(e.get<int>());
        if (static_cast<int>(exps.size()) != r.rank) throw SoergelError("rpoly term: wrong rank");
        CoefElem c = coef_from_json(r.coef, term[1]);
        std::vector<RPoly::Term> one = {{std::move(exps), std::move(c)}};
        if (one[0].c.is_zero()) continue;
        out = out + RPoly::from_sorted(r.rank, r.coef, std::move(one));
    }
    return out;
}

json localized_to_json(const Localized& x) {
    json j;
    j["word"] = word_str(x.word);
    json comps = json::object();
    for (std::size_t idx = 0; idx < x.comps.size(); ++idx) {
        const QElem& q = x.comps[idx];
        if (q.num_is_zero()) continue;
        json c;
        c["num"] = rpoly_to_json(q.num());
        json den = json::array();
        for (const GroupElem& refl : q.den()) den.push_back(refl.str());
        c["den"] = den;
        comps[bits_str(bits_from_index(idx, x.word.size()))] = c;
    }
    j["components"] = comps;
    return j;
}

Localized localized_from_json(const RealizationPtr& r, const json& j) {
    LetterWord w = parse_word(j.at("word").get<std::string>());
    Localized out = localized_zero(r, w);
    if (!j.contains("components")) return out;
    for (const auto& [key, val] : j.at("components").items()) {
        BitVector e = parse_bits(key);
        if (e.size() != w.size()) throw SoergelError("component key length mismatch");
        RPoly num = rpoly_from_json(*r, val.at("num"));
        std::vector<GroupElem> den;
        if (val.contains("den"))
            for (const json& d : val.at("den")) {
                LetterWord rw = parse_word(d.get<std::string>());
                GroupElem refl = word_product(rw, 0);
                if (refl.length() % 2 == 0 || refl.length() != static_cast<int>(rw.size()))
                    throw SoergelError("den entry is not a reduced reflection word: " +
                                       d.get<std::string>());
                den.push_back(refl);
            }
        out.comps[bits_to_index(e)] = QElem(r, std::move(num), std::move(den));
    }
    return out;
}

std::string data_directory() {
    if (const char* env = std::getenv("SOERGEL_DATA_DIR")) return env;
#ifdef SOERGEL_DATA_DIR
    return SOERGEL_DATA_DIR;
#else
    return "data/realizations";
#endif
}

std::vector<std::string> catalog_names() {
    return {"a1xa1", "a2", "b2", "g2", "h2", "m4-degenerate", "m4-degenerate-f2", "universal"};
}

RealizationPtr load_catalog_realization(const std::string& name) {
    namespace fs = std::filesystem;
    fs::path p = fs::path(data_directory()) / (name + ".json");
    if (!fs::exists(p))
        throw SoergelError("unknown realization '" + name + "' (no file " + p.string() + ")");
    std::ifstream in(p);
    json j = json::parse(in);
    return validate_realization(realization_config_from_json(j, name));
}

RealizationPtr load_realization(const std::string& path_or_name) {
    namespace fs = std::filesystem;
    if (fs::exists(path_or_name) && fs::is_regular_file(path_or_name)) {
        std::ifstream in(path_or_name);
        json j = json::parse(in);
        return validate_realization(
            realization_config_from_json(j, fs::path(path_or_name).stem().string()));
    }
    return load_catalog_realization(path_or_name);
}

} // namespace soergel
