#pragma once

#include <json.hpp>
#include <string>

#include "charlab/fgl.hpp"
#include "charlab/lusztig.hpp"
#include "charlab/qchar.hpp"
#include "charlab/weightlat.hpp"

namespace charlab {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json weight_to_json(const WeightVector& w);
WeightVector weight_from_json(const Json& j);

/// {"terms":[{"mu":[...],"c":...}, ...]} in the canonical weight order.
Json character_to_json(const Character& c);
Character character_from_json(const Json& j);

/// Character table file with header {schema_version, type, p, level, e1_source}.
struct CharacterTableFile {
    std::string type;
    Int p = 2;
    int level = 1;
    std::string e1_source;
    std::map<WeightVector, Character> entries;
};
Json table_to_json(const CharacterTableFile& t);
CharacterTableFile table_from_json(const Json& j);
void save_table(const CharacterTableFile& t, const std::string& path);
CharacterTableFile load_table(const std::string& path);

/// {"p":..., "n":..., "terms":[{"t":...,"V":[[[i,[a]],e],...],"W":[...],"c":...}]}
Json eps_to_json(const EpsTChar& x);
EpsTChar eps_from_json(const Json& j);

/// {"order":N, "terms":[{"exp":[...], "c":"<ring element>"}]}
Json series_to_json(const TruncatedSeries& s);

Json kl_to_json(const KLPolynomial& p);

} // namespace charlab
