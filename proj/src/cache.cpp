#include "qweingarten/cache.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

namespace qweingarten {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "qweingarten-weingarten-table";

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << value;
    return out.str();
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_string(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_from_json(const json& rows, std::size_t size, const std::string& basis) {
    if (!rows.is_array() || rows.size() != size) {
        throw CacheFormatError("matrix has the wrong number of rows");
    }
    RationalMatrix out(size, size, basis);
    for (std::size_t r = 0; r < size; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != size) {
            throw CacheFormatError("matrix row " + std::to_string(r) + " has the wrong length");
        }
        for (std::size_t c = 0; c < size; ++c) {
            try {
                out(r, c) = parse_rational(row[c].get<std::string>());
            } catch (const std::exception& e) {
                throw CacheFormatError("matrix entry (" + std::to_string(r) + "," +
                                       std::to_string(c) + "): " + e.what());
            }
        }
    }
    return out;
}

std::string memory_key(const GramSpec& spec) {
    return spec.basis_key() + ":" + std::to_string(spec.n);
}

} // namespace

std::string serialize_table(const WeingartenTable& table) {
    json record;
    record["format"] = kFormatName;
    record["format_version"] = kCacheFormatVersion;
    record["case"] = to_string(table.spec.group);
    record["half_size"] = table.spec.half_size;
    record["word"] = table.spec.word.to_string();
    record["n"] = table.spec.n;
    json basis = json::array();
    for (const auto& p : table.basis) {
        basis.push_back(std::vector<int>(p.partners().begin(), p.partners().end()));
    }
    record["basis"] = std::move(basis);
    record["gram"] = matrix_to_json(table.gram);
    record["weingarten"] = matrix_to_json(table.weingarten);
    record["checksum"] = hex64(fnv1a64(record.dump()));
    return record.dump(1) + "\n";
}

WeingartenTable parse_table(std::string_view text) {
    json record;
    try {
        record = json::parse(text);
    } catch (const json::exception& e) {
        throw CacheFormatError(std::string("not valid JSON: ") + e.what());
    }
    try {
        if (!record.is_object() || record.value("format", "") != kFormatName) {
            throw CacheFormatError("not a Weingarten table record");
        }
        int version = record.at("format_version").get<int>();
        if (version != kCacheFormatVersion) {
            throw CacheFormatError("format version " + std::to_string(version) +
                                   " (expected " + std::to_string(kCacheFormatVersion) + ")");
        }
        std::string stored_checksum = record.at("checksum").get<std::string>();
        json unsigned_record = record;
        unsigned_record.erase("checksum");
        std::string actual_checksum = hex64(fnv1a64(unsigned_record.dump()));
        if (stored_checksum != actual_checksum) {
            throw CacheFormatError("checksum failure (stored " + stored_checksum + ", computed " +
                                   actual_checksum + ")");
        }

        WeingartenTable table;
        GroupCase group = parse_group_case(record.at("case").get<std::string>());
        int n = record.at("n").get<int>();
        table.spec = group == GroupCase::orthogonal
                         ? GramSpec::orthogonal(record.at("half_size").get<int>(), n)
                         : GramSpec::unitary(ColorWord::parse(record.at("word").get<std::string>()), n);
        for (const auto& partner : record.at("basis")) {
            table.basis.emplace_back(partner.get<std::vector<int>>());
        }
        const std::string key = table.spec.basis_key();
        table.gram = matrix_from_json(record.at("gram"), table.basis.size(), key);
        table.weingarten = matrix_from_json(record.at("weingarten"), table.basis.size(), key);
        return table;
    } catch (const CacheFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheFormatError(std::string("malformed record: ") + e.what());
    }
}

std::string cache_file_name(const GramSpec& spec) {
    std::string index;
    if (spec.group == GroupCase::orthogonal) {
        index = std::to_string(spec.half_size);
    } else {
        index = spec.word.empty() ? "empty" : spec.word.to_string();
    }
    return to_string(spec.group) + "_" + index + "_" + std::to_string(spec.n) + ".wgt.json";
}

WeingartenCache::WeingartenCache(std::filesystem::path directory, EnumerationLimits limits)
    : directory_(std::move(directory)), limits_(limits) {}

std::optional<std::filesystem::path> WeingartenCache::directory_from_environment() {
    const char* value = std::getenv(kCacheDirEnv);
    if (value == nullptr || *value == '\0') {
        return std::nullopt;
    }
    return std::filesystem::path(value);
}

std::filesystem::path WeingartenCache::path_for(const GramSpec& spec) const {
    if (!directory_) {
        throw std::logic_error("cache has no directory configured");
    }
    return *directory_ / cache_file_name(spec);
}

void WeingartenCache::store(const WeingartenTable& table) const {
    std::filesystem::path target = path_for(table.spec);
    std::filesystem::create_directories(target.parent_path());

    static std::atomic<unsigned> counter{0};
    std::ostringstream suffix;
    suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << counter.fetch_add(1);
    std::filesystem::path temp = target;
    temp += suffix.str();
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write cache file " + temp.string());
        }
        out << serialize_table(table);
        if (!out.flush()) {
            throw std::runtime_error("short write to cache file " + temp.string());
        }
    }
    std::filesystem::rename(temp, target);
}

CacheLoadResult WeingartenCache::load(const GramSpec& spec) const {
    CacheLoadResult result;
    std::filesystem::path source = path_for(spec);
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        return result;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        WeingartenTable table = parse_table(text.str());
        if (!(table.spec == spec)) {
            throw CacheFormatError("record describes a different spec");
        }
        // Cheap structural checks against a fresh enumeration and Gram matrix.
        GramMatrix gram = build_gram(spec, limits_);
        if (table.basis != gram.basis) {
            throw CacheFormatError("basis differs from the canonical enumeration");
        }
        if (!(table.gram == gram.matrix)) {
            throw CacheFormatError("Gram matrix differs from recomputation");
        }
        result.status = CacheStatus::hit;
        result.table = std::move(table);
    } catch (const CacheFormatError& e) {
        result.status = CacheStatus::corrupt;
        result.diagnostic = source.string() + ": " + e.what();
    }
    return result;
}

std::shared_ptr<const WeingartenTable> WeingartenCache::get(const GramSpec& spec) {
    const std::string key = memory_key(spec);
    {
        std::lock_guard lock(mutex_);
        auto it = memory_.find(key);
        if (it != memory_.end()) {
            return it->second;
        }
    }

    std::optional<WeingartenTable> table;
    std::string diagnostic;
    if (directory_) {
        CacheLoadResult loaded = load(spec);
        if (loaded.status == CacheStatus::hit) {
            table = std::move(loaded.table);
        } else if (loaded.status == CacheStatus::corrupt) {
            diagnostic = loaded.diagnostic + " (recomputing)";
        }
    }
    bool computed = false;
    if (!table) {
        table = build_weingarten(spec, limits_);
        computed = true;
    }
    if (computed && directory_) {
        store(*table);
    }

    auto shared = std::make_shared<const WeingartenTable>(std::move(*table));
    std::lock_guard lock(mutex_);
    if (!diagnostic.empty()) {
        diagnostics_.push_back(std::move(diagnostic));
    }
    auto [it, inserted] = memory_.emplace(key, std::move(shared));
    return it->second;
}

std::vector<std::string> WeingartenCache::diagnostics() const {
    std::lock_guard lock(mutex_);
    return diagnostics_;
}

} // namespace qweingarten
