#ifndef MH_CONFIG_HPP
#define MH_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mh/comodule.hpp"

namespace mh {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// message carries "<source>: <field path>: ..." or "<source>:<line>:<col>: ..."
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string source;
    std::string name;
    std::string description;
    GroupDatum datum;
    std::vector<i64> factors;  // explicit abelian presentation, empty for Cayley tables
    std::optional<i64> modulus;
    std::vector<std::string> samples;  // parsed against zeta_M once M is known
    int kappa_cap = kKappaDimCap;
    std::optional<Cocycle> sigma;  // optional distinguished cocycle
    Json expect = Json::object();

    i64 effective_modulus() const { return modulus ? *modulus : default_modulus(datum); }
    std::vector<Cyclo> parsed_samples(i64 M) const;
};

RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

// "0,1,-1,z" -> {"0", "1", "-1", "z"}
std::vector<std::string> split_samples(const std::string& list);

}  // namespace mh

#endif
