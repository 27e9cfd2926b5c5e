#include "tc/cache.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace tc {

namespace {

struct TextRecord {
    int weight;
    std::string lambda, mu, nu;
    Int coeff;

    std::tuple<int, const std::string&, const std::string&, const std::string&> key() const {
        return {weight, lambda, mu, nu};
    }
};

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

}  // namespace

void load_cache_file_into(LrCache& cache, const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) return;  // absent file: empty cache
    std::string line;
    std::size_t lineno = 0;
    bool have_prev = false;
    TextRecord prev{};
    std::map<LrCache::Key, Int> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) throw std::invalid_argument("cache line " + std::to_string(lineno) + ": empty line");
        auto fields = split_tabs(line);
        if (fields.size() != 4)
            throw std::invalid_argument("cache line " + std::to_string(lineno) + ": expected 4 tab-separated fields, got " +
                                        std::to_string(fields.size()));
        Partition lambda, mu, nu;
        Int coeff;
        try {
            lambda = Partition::parse(fields[0]);
            mu = Partition::parse(fields[1]);
            nu = Partition::parse(fields[2]);
            coeff = Int(fields[3]);
        } catch (const std::exception& e) {
            throw std::invalid_argument("cache line " + std::to_string(lineno) + ": " + e.what());
        }
        if (coeff < 0)
            throw std::invalid_argument("cache line " + std::to_string(lineno) + ": negative coefficient");
        TextRecord rec{lambda.size(), fields[0], fields[1], fields[2], coeff};
        if (have_prev && !(prev.key() < rec.key()))
            throw std::invalid_argument("cache line " + std::to_string(lineno) + ": records out of order or duplicated");
        LrCache::Key norm{lambda.parts(), std::min(mu.parts(), nu.parts()), std::max(mu.parts(), nu.parts())};
        if (auto it = seen.find(norm); it != seen.end() && it->second != coeff)
            throw std::invalid_argument("cache line " + std::to_string(lineno) + ": conflicting record for the same triple");
        seen.emplace(norm, coeff);
        cache.insert(lambda, mu, nu, coeff);
        prev = std::move(rec);
        have_prev = true;
    }
}

LrCache load_cache_file(const std::string& path) {
    LrCache cache;
    load_cache_file_into(cache, path);
    return cache;
}

void store_cache_file(const LrCache& cache, const std::string& path) {
    std::vector<TextRecord> records;
    for (const auto& [key, coeff] : cache.snapshot()) {
        const auto& [lambda, mu, nu] = key;
        TextRecord rec;
        rec.lambda = Partition(lambda).to_string();
        rec.mu = Partition(mu).to_string();
        rec.nu = Partition(nu).to_string();
        rec.weight = Partition(lambda).size();
        rec.coeff = coeff;
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const TextRecord& a, const TextRecord& b) { return a.key() < b.key(); });

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.is_open()) throw std::runtime_error("cannot open cache file for writing: " + tmp);
        for (const auto& r : records)
            out << r.lambda << '\t' << r.mu << '\t' << r.nu << '\t' << r.coeff.get_str() << '\n';
        out.flush();
        if (!out.good()) throw std::runtime_error("write failed for cache file: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace tc
