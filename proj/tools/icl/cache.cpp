#include "cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "icl/error.hpp"
#include "icl/groebner/buchberger.hpp"

namespace icl::cli {

namespace {

std::string key_text(const Ideal& I)
{
    std::string key = I.ring().to_string() + " " + I.ring().order().to_string() + "\n";
    for (const auto& g : I.generators())
        key += g.to_string() + "\n";
    return key;
}

std::string fnv1a(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string file_name(const std::string& key)
{
    return "gb-" + fnv1a(key) + ".txt";
}

std::string basis_text(const std::vector<Polynomial>& basis)
{
    std::string text;
    for (const auto& g : basis)
        text += g.to_string() + "\n";
    return text;
}

} // namespace

GbCache::GbCache(std::string dir) : dir_(std::move(dir))
{
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        raise(ErrorKind::Unsupported, "cannot create cache directory " + dir_ + ": " + ec.message());
}

std::optional<std::vector<Polynomial>> GbCache::load(const Ideal& I) const
{
    const std::string key = key_text(I);
    std::ifstream in(std::filesystem::path(dir_) / file_name(key));
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    if (content.compare(0, key.size(), key) != 0 || content.compare(key.size(), 3, "-- ") != 0)
        return std::nullopt;
    const auto eol = content.find('\n', key.size());
    if (eol == std::string::npos)
        return std::nullopt;
    const std::string body = content.substr(eol + 1);
    if (content.substr(key.size() + 3, eol - key.size() - 3) != fnv1a(body))
        return std::nullopt;

    std::vector<Polynomial> basis;
    std::istringstream lines(body);
    try {
        for (std::string line; std::getline(lines, line);)
            if (!line.empty())
                basis.push_back(parse_polynomial(line, I.ring()));
    } catch (const Error&) {
        return std::nullopt;
    }
    if (!is_groebner_basis(basis))
        return std::nullopt;
    for (const auto& g : I.generators())
        if (!reduce(g, basis).is_zero())
            return std::nullopt;
    return basis;
}

void GbCache::store(const Ideal& I, const std::vector<Polynomial>& basis) const
{
    const std::string key = key_text(I);
    const auto target = std::filesystem::path(dir_) / file_name(key);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        const std::string body = basis_text(basis);
        out << key << "-- " << fnv1a(body) << "\n" << body;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
}

std::vector<Polynomial> GbCache::basis(const Ideal& I) const
{
    if (auto cached = load(I))
        return *cached;
    std::vector<Polynomial> gb;
    for (const auto& g : I.groebner_basis())
        gb.push_back(g.with_ring(I.ring()));
    store(I, gb);
    return gb;
}

} // namespace icl::cli
