#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tetra {

/// Structured key/value report with a stable schema. Serialization is
/// deterministic: identical configs and seeds produce byte-identical
/// files. Wall-clock timing never enters the serialized form; it is
/// printed on the human-readable side only.
struct Report {
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    std::vector<Section> sections;

    Section& section(const std::string& name)
    {
        for (auto& s : sections)
            if (s.name == name) return s;
        sections.push_back({name, {}});
        return sections.back();
    }

    void put(const std::string& sec, const std::string& key, const std::string& value)
    {
        section(sec).entries.push_back({key, value});
    }
    void put(const std::string& sec, const std::string& key, long long value)
    {
        put(sec, key, std::to_string(value));
    }
    void put_bool(const std::string& sec, const std::string& key, bool v)
    {
        put(sec, key, v ? std::string("true") : std::string("false"));
    }

    std::string serialize() const;
};

struct CheckResult {
    std::string name;
    bool ran = false;
    bool pass = false;
    std::string error;
    double seconds = 0.0; // reported to stdout only
};

} // namespace tetra
