#pragma once

#include "simplicia/complex.hpp"
#include "simplicia/corpus.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace simplicia {

struct SuiteEntry
{
    std::string fixture;
    std::string property;
    bool passed = false;
    /// The complex exhibiting a failure (the fixture itself or the
    /// construction that broke); empty for passing entries.
    std::optional<GeometricComplex> counterexample;
    std::string detail;
};

struct SuiteReport
{
    std::vector<SuiteEntry> entries;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
    /// [{ "fixture", "property", "status": "pass"|"fail", "counterexample": complex|null }]
    nlohmann::json to_json() const;
    /// One line per entry; failing entries carry their detail.
    std::string to_text() const;
};

struct SuiteOptions
{
    /// Probe budget per realization check (<= 0: every probe).
    long samples = 600;
    /// Highest iterate used by the iterated contraction check. It is further
    /// capped at 4 for dim <= 2, 3 for dim 3 and 2 above, since the iterate
    /// sizes grow like ((n+1)!)^m.
    int contraction_depth = 4;
};

/// Runs every property on every fixture, in fixture-name order. Exceptions
/// become failing entries. A fixture failing face closure, affine
/// independence or proper intersection gets no further entries.
SuiteReport run_property_suite(const std::vector<Fixture>& corpus, const SuiteOptions& options = {});

/// Names of the properties in the order they are run.
const std::vector<std::string>& suite_properties();

}  // namespace simplicia
