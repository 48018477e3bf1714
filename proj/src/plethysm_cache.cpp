#include "autopos/plethysm_cache.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace autopos {

namespace {

constexpr std::string_view header = "plethysm-cache v1";

std::string file_stem(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.vec().size(); ++i) {
        if (i) out += '-';
        out += std::to_string(p.vec()[i]);
    }
    return out;
}

} // namespace

std::string PlethysmCacheEntry::serialize() const {
    std::string out(header);
    out += '\n';
    out += lhs.to_string() + ' ' + rhs.to_string() + '\n';
    for (const auto& c : constituents) {
        out += c.shape.to_string();
        out += '\t';
        out += std::to_string(c.multiplicity);
        out += '\n';
    }
    return out;
}

std::optional<PlethysmCacheEntry> PlethysmCacheEntry::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != header) return std::nullopt;
    PlethysmCacheEntry entry;
    if (!std::getline(in, line)) return std::nullopt;
    const auto space = line.find(' ');
    if (space == std::string::npos) return std::nullopt;
    try {
        entry.lhs = Partition::parse(std::string_view(line).substr(0, space));
        entry.rhs = Partition::parse(std::string_view(line).substr(space + 1));
        const int degree = entry.lhs.size() * entry.rhs.size();
        while (std::getline(in, line)) {
            const auto tab = line.find('\t');
            if (tab == std::string::npos) return std::nullopt;
            Constituent c;
            c.shape = Partition::parse(std::string_view(line).substr(0, tab));
            const char* first = line.data() + tab + 1;
            const char* last = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(first, last, c.multiplicity);
            if (ec != std::errc() || ptr != last || c.multiplicity <= 0) return std::nullopt;
            if (c.shape.size() != degree) return std::nullopt;
            if (!entry.constituents.empty() && !(entry.constituents.back().shape < c.shape)) return std::nullopt;
            entry.constituents.push_back(std::move(c));
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return entry;
}

std::optional<std::filesystem::path> PlethysmCache::directory_from_env() {
    const char* env = std::getenv("AUTOPOS_CACHE_DIR");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return std::filesystem::path(env);
}

std::filesystem::path PlethysmCache::path_for(const Partition& lambda, const Partition& mu) const {
    return dir_ / ("pleth_" + file_stem(lambda) + "_" + file_stem(mu) + ".txt");
}

std::optional<Decomposition> PlethysmCache::load(const Partition& lambda, const Partition& mu) const {
    std::ifstream in(path_for(lambda, mu), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    auto entry = PlethysmCacheEntry::parse(buf.str());
    if (!entry || entry->lhs != lambda || entry->rhs != mu) return std::nullopt;
    return std::move(entry->constituents);
}

void PlethysmCache::store(const Partition& lambda, const Partition& mu, const Decomposition& constituents) const {
    std::filesystem::create_directories(dir_);
    const auto target = path_for(lambda, mu);
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp." + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << PlethysmCacheEntry{lambda, mu, constituents}.serialize();
        if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move cache file into place: " + target.string());
    }
}

Decomposition cached_plethysm(const Partition& lambda, const Partition& mu, const PlethysmOptions& options,
                              const PlethysmCache* cache, bool* hit) {
    if (hit) *hit = false;
    if (cache) {
        if (auto stored = cache->load(lambda, mu)) {
            if (hit) *hit = true;
            return options.max_height > 0 ? restrict_height(*stored, options.max_height) : *stored;
        }
    }
    Decomposition result = plethysm(lambda, mu, options);
    if (cache && options.max_height <= 0) cache->store(lambda, mu, result);
    return result;
}

} // namespace autopos
