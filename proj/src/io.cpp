#include "charlab/io.hpp"

#include <fstream>

namespace charlab {

Json weight_to_json(const WeightVector& w) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < w.coords.size(); ++i) arr.push_back(w.coords[i]);
    return arr;
}

WeightVector weight_from_json(const Json& j) {
    if (!j.is_array()) throw_domain("weight must be a JSON array", "mu");
    IVec v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<Int>();
    return WeightVector(v);
}

Json character_to_json(const Character& c) {
    Json terms = Json::array();
    for (auto& [mu, coeff] : c.terms()) {
        Json t;
        t["mu"] = weight_to_json(mu);
        t["c"] = coeff;
        terms.push_back(std::move(t));
    }
    Json out;
    out["terms"] = std::move(terms);
    return out;
}

Character character_from_json(const Json& j) {
    Character c;
    for (auto& t : j.at("terms")) c.add_term(weight_from_json(t.at("mu")), t.at("c").get<Int>());
    return c;
}

Json table_to_json(const CharacterTableFile& t) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["type"] = t.type;
    out["p"] = t.p;
    out["level"] = t.level;
    out["e1_source"] = t.e1_source;
    Json entries = Json::array();
    for (auto& [lambda, chi] : t.entries) {
        Json e;
        e["lambda"] = weight_to_json(lambda);
        e["terms"] = character_to_json(chi)["terms"];
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

CharacterTableFile table_from_json(const Json& j) {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        throw_domain("unsupported table schema version", "schema_version");
    CharacterTableFile t;
    t.type = j.at("type").get<std::string>();
    t.p = j.at("p").get<Int>();
    t.level = j.at("level").get<int>();
    t.e1_source = j.at("e1_source").get<std::string>();
    for (auto& e : j.at("entries")) {
        Json wrap;
        wrap["terms"] = e.at("terms");
        t.entries[weight_from_json(e.at("lambda"))] = character_from_json(wrap);
    }
    return t;
}

void save_table(const CharacterTableFile& t, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw_resource("cannot open " + path + " for writing", "path");
    os << table_to_json(t).dump(2) << "\n";
}

CharacterTableFile load_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw_domain("cannot open " + path, "path");
    Json j = Json::parse(is);
    return table_from_json(j);
}

Json eps_to_json(const EpsTChar& x) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    if (x.space().generic) {
        out["p"] = nullptr;
        out["n"] = nullptr;
        out["generic"] = true;
    } else {
        out["p"] = x.space().p;
        out["n"] = x.space().level;
    }
    Json terms = Json::array();
    for (auto& [key, c] : x.terms()) {
        Json t;
        t["t"] = key.first;
        Json vs = Json::array(), ws = Json::array();
        for (auto& [var, e] : key.second) {
            Json entry = Json::array();
            Json keyj = Json::array();
            keyj.push_back(var.node + 1);
            Json params = Json::array();
            for (Int a : var.a) params.push_back(a);
            keyj.push_back(std::move(params));
            entry.push_back(std::move(keyj));
            entry.push_back(e);
            (var.kind == VarKey::V ? vs : ws).push_back(std::move(entry));
        }
        t["V"] = std::move(vs);
        t["W"] = std::move(ws);
        t["c"] = c;
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

EpsTChar eps_from_json(const Json& j) {
    ParamSpace space = (j.contains("generic") && j["generic"].get<bool>())
                           ? ParamSpace::free_lattice()
                           : ParamSpace::group(j.at("p").get<Int>(), j.at("n").get<int>());
    EpsTChar out(space);
    for (auto& t : j.at("terms")) {
        QMonomial m;
        auto read_vars = [&](const Json& arr, VarKey::Kind kind) {
            for (auto& entry : arr) {
                const Json& keyj = entry.at(0);
                VarKey key;
                key.kind = kind;
                key.node = keyj.at(0).get<int>() - 1;
                for (auto& a : keyj.at(1)) key.a.push_back(a.get<Int>());
                m[key] += entry.at(1).get<Int>();
            }
        };
        read_vars(t.at("V"), VarKey::V);
        read_vars(t.at("W"), VarKey::W);
        out.add_term(t.at("t").get<Int>(), std::move(m), t.at("c").get<Int>());
    }
    return out;
}

Json series_to_json(const TruncatedSeries& s) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["ring"] = s.ring().descriptor();
    out["order"] = s.order();
    Json terms = Json::array();
    for (auto& [e, c] : s.terms()) {
        Json t;
        t["exp"] = e;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json kl_to_json(const KLPolynomial& p) {
    Json out;
    out["coeffs"] = p.coeffs();
    return out;
}

} // namespace charlab
