#include "macias/spec_io.hpp"

#include <fstream>

#include <json.hpp>

namespace macias::cli {

namespace {

using nlohmann::json;

Natural natural_from(const json& j, const char* where) {
    if (!j.is_number_integer() || j.is_number_float())
        throw SpecError(std::string(where) + ": expected an integer");
    if (j.is_number_unsigned()) {
        const std::uint64_t v = j.get<std::uint64_t>();
        if (v > BijectionSpecFile::kJsonMaxNumber)
            throw SpecError(std::string(where) + ": number exceeds 2^53-1");
        if (v == 0)
            throw SpecError(std::string(where) + ": naturals start at 1");
        return Natural{v};
    }
    throw SpecError(std::string(where) + ": expected a positive integer");
}

std::vector<std::vector<Natural>> cycles_from(const json& j, const char* where) {
    if (!j.is_array())
        throw SpecError(std::string(where) + ": cycles must be an array");
    std::vector<std::vector<Natural>> out;
    for (const auto& cyc : j) {
        if (!cyc.is_array())
            throw SpecError(std::string(where) + ": each cycle must be an array");
        if (cyc.size() < 2)
            throw SpecError(std::string(where) + ": cycles need at least two elements");
        std::vector<Natural> cycle;
        for (const auto& x : cyc)
            cycle.push_back(natural_from(x, where));
        out.push_back(std::move(cycle));
    }
    return out;
}

json cycles_to_json(const std::vector<std::vector<Natural>>& cycles) {
    json out = json::array();
    for (const auto& cyc : cycles) {
        json jc = json::array();
        for (const Natural& x : cyc) {
            if (x.value() > BijectionSpecFile::kJsonMaxNumber)
                throw SpecError("cycle element exceeds the 2^53-1 interchange bound");
            jc.push_back(x.value());
        }
        out.push_back(std::move(jc));
    }
    return out;
}

} // namespace

BijectionSpecFile parse_spec_file(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw SpecError("spec file must be a JSON object");

    for (const auto& [key, unused] : doc.items()) {
        if (key != "version" && key != "kind" && key != "finite" && key != "primePower")
            throw SpecError("unknown key '" + key + "' in spec file");
    }

    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<std::int64_t>() != 1)
        throw SpecError("spec file version must be the integer 1");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw SpecError("spec file needs a string 'kind'");

    BijectionSpecFile spec;
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "finite") {
        spec.kind = BijectionSpecFile::Kind::Finite;
        if (!doc.contains("finite") || doc.contains("primePower"))
            throw SpecError("finite kind requires exactly the 'finite' section");
        const auto& sec = doc["finite"];
        if (!sec.is_object() || !sec.contains("cycles"))
            throw SpecError("'finite' section needs a 'cycles' array");
        spec.finite_cycles = cycles_from(sec["cycles"], "finite.cycles");
    } else if (kind == "prime-power") {
        spec.kind = BijectionSpecFile::Kind::PrimePower;
        if (!doc.contains("primePower") || doc.contains("finite"))
            throw SpecError("prime-power kind requires exactly the 'primePower' section");
        const auto& sec = doc["primePower"];
        if (!sec.is_object() || !sec.contains("entries") || !sec["entries"].is_array())
            throw SpecError("'primePower' section needs an 'entries' array");
        for (const auto& e : sec["entries"]) {
            if (!e.is_object() || !e.contains("prime") || !e.contains("cycles"))
                throw SpecError("each entry needs 'prime' and 'cycles'");
            homeo::PrimePowerPermSpec::Entry entry{
                natural_from(e["prime"], "entry.prime"),
                cycles_from(e["cycles"], "entry.cycles")};
            spec.prime_power.entries.push_back(std::move(entry));
        }
    } else {
        throw SpecError("kind must be 'finite' or 'prime-power'");
    }
    return spec;
}

BijectionSpecFile load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw SpecError("cannot read spec file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_spec_file(text);
}

std::string serialize_spec_file(const BijectionSpecFile& spec) {
    json doc;
    doc["version"] = 1;
    if (spec.kind == BijectionSpecFile::Kind::Finite) {
        doc["kind"] = "finite";
        doc["finite"] = json{{"cycles", cycles_to_json(spec.finite_cycles)}};
    } else {
        doc["kind"] = "prime-power";
        json entries = json::array();
        for (const auto& e : spec.prime_power.entries) {
            if (e.prime.value() > BijectionSpecFile::kJsonMaxNumber)
                throw SpecError("prime exceeds the 2^53-1 interchange bound");
            entries.push_back(json{{"prime", e.prime.value()},
                                   {"cycles", cycles_to_json(e.cycles)}});
        }
        doc["primePower"] = json{{"entries", std::move(entries)}};
    }
    return doc.dump(2) + "\n";
}

homeo::FinSuppBijection to_bijection(const BijectionSpecFile& spec) {
    if (spec.kind == BijectionSpecFile::Kind::Finite)
        return homeo::FinSuppBijection::from_cycles(spec.finite_cycles);
    return homeo::synthesize(spec.prime_power);
}

BijectionSpecFile finite_spec_from(const homeo::FinSuppBijection& h) {
    BijectionSpecFile spec;
    spec.kind = BijectionSpecFile::Kind::Finite;
    spec.finite_cycles = h.cycles();
    return spec;
}

} // namespace macias::cli
