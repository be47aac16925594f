#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "macias/homeo.hpp"

namespace macias::cli {

using numtheory::Natural;

/// On-disk description of a bijection. Exactly the section named by
/// kind is present. Numbers are capped at 2^53-1 for portable
/// interchange; larger values are rejected at parse time.
struct BijectionSpecFile {
    static constexpr std::uint64_t kJsonMaxNumber = (std::uint64_t{1} << 53) - 1;

    enum class Kind { Finite, PrimePower };

    int version = 1;
    Kind kind = Kind::Finite;
    std::vector<std::vector<Natural>> finite_cycles;   // kind Finite
    homeo::PrimePowerPermSpec prime_power;             // kind PrimePower
};

/// Parses a spec file document. Throws SpecError on malformed JSON,
/// wrong version, missing or extra sections, or out-of-range numbers.
BijectionSpecFile parse_spec_file(const std::string& json_text);

BijectionSpecFile load_spec_file(const std::filesystem::path& path);

/// Deterministic serialization: sorted keys, two-space indent, trailing
/// newline. Parsing the output and re-serializing is byte-identical.
std::string serialize_spec_file(const BijectionSpecFile& spec);

/// Realizes the description as a finitely supported bijection; cycle
/// and prime-power validation errors surface as SpecError.
homeo::FinSuppBijection to_bijection(const BijectionSpecFile& spec);

/// Finite-kind description of an existing bijection, with canonical
/// cycles.
BijectionSpecFile finite_spec_from(const homeo::FinSuppBijection& h);

} // namespace macias::cli
