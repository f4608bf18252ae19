#include "serialize.hpp"

#include "errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prevariety {

namespace {

std::string format_rows(const IntMatrix& rows) {
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ';';
        s += format_vector(rows[i]);
    }
    return s + "}";
}

[[noreturn]] void bad(std::string_view what, std::string_view line) {
    throw MalformedInput(std::string(what) + ": " + std::string(line));
}

IntVector parse_vector(std::string_view s, std::size_t dim, std::string_view line) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') bad("malformed vector", line);
    s = s.substr(1, s.size() - 2);
    IntVector v;
    while (!s.empty()) {
        const auto comma = s.find(',');
        v.emplace_back(s.substr(0, comma));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (v.size() != dim) bad("vector of wrong length", line);
    return v;
}

IntMatrix parse_rows(std::string_view s, std::size_t dim, std::string_view line) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') bad("malformed row set", line);
    s = s.substr(1, s.size() - 2);
    IntMatrix rows;
    while (!s.empty()) {
        const auto semi = s.find(';');
        rows.push_back(parse_vector(s.substr(0, semi), dim, line));
        if (semi == std::string_view::npos) break;
        s.remove_prefix(semi + 1);
    }
    return rows;
}

// Value of `key=` inside a space-separated field list.
std::string_view field(std::string_view line, std::string_view key) {
    const std::string needle = " " + std::string(key) + "=";
    const auto at = line.find(needle);
    if (at == std::string_view::npos) bad("missing field " + std::string(key), line);
    std::string_view rest = line.substr(at + needle.size());
    return rest.substr(0, rest.find(' '));
}

std::size_t to_size(std::string_view s, std::string_view line) {
    std::size_t value = 0;
    try {
        value = std::stoull(std::string(s));
    } catch (const std::exception&) {
        bad("expected a count", line);
    }
    return value;
}

}  // namespace

std::string format_cone(const ClosureKey& key) {
    return "CONE dim=" + std::to_string(key.cone_dimension()) + " eq=" +
           format_rows(key.equations) + " ineq=" + format_rows(key.inequalities);
}

ClosureKey parse_cone(std::string_view line, std::size_t ambient_dim) {
    if (!line.starts_with("CONE ")) bad("expected CONE line", line);
    ClosureKey key;
    key.dim = ambient_dim;
    key.equations = parse_rows(field(line, "eq"), ambient_dim, line);
    key.inequalities = parse_rows(field(line, "ineq"), ambient_dim, line);
    if (to_size(field(line, "dim"), line) != static_cast<std::size_t>(key.cone_dimension())) {
        bad("cone dimension does not match its equations", line);
    }
    return key;
}

void serialize(const PrevarietyResult& r, std::ostream& out) {
    out << "PREVARIETY v1\n";
    out << "system: " << r.meta.system << '\n';
    out << "n: " << r.meta.dim << '\n';
    out << "fans: " << r.meta.fans << '\n';
    out << "seed: " << r.meta.seed << '\n';
    out << "workers: " << r.meta.workers << '\n';
    for (const auto& c : r.cones) out << format_cone(c) << '\n';
    out << "RAYS count=" << r.rays.size() << '\n';
    for (const auto& ray : r.rays) out << "RAY " << format_vector(ray) << '\n';
    if (r.have_maximal) {
        for (const auto& [dim, count] : r.maximal_by_dim) {
            out << "MAXIMAL dim=" << dim << " count=" << count << '\n';
        }
    }
}

std::string serialize(const PrevarietyResult& r) {
    std::ostringstream out;
    serialize(r, out);
    return out.str();
}

void write_result(const PrevarietyResult& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    serialize(r, out);
    out.flush();
    if (!out) throw IoError("write to " + path + " failed");
}

PrevarietyResult parse_result(std::string_view text) {
    PrevarietyResult r;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "PREVARIETY v1") bad("missing version tag", line);
    auto header = [&](std::string_view key) -> std::string {
        if (!std::getline(in, line) || !line.starts_with(std::string(key) + ": ")) {
            bad("expected header " + std::string(key), line);
        }
        return line.substr(key.size() + 2);
    };
    auto count_header = [&](std::string_view key) {
        const std::string value = header(key);
        return to_size(value, line);
    };
    r.meta.system = header("system");
    r.meta.dim = count_header("n");
    r.meta.fans = count_header("fans");
    r.meta.seed = count_header("seed");
    r.meta.workers = static_cast<unsigned>(count_header("workers"));
    std::size_t expected_rays = 0;
    bool saw_rays = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::string_view l = line;
        if (l.starts_with("CONE ")) {
            r.cones.push_back(parse_cone(l, r.meta.dim));
        } else if (l.starts_with("RAYS ")) {
            expected_rays = to_size(field(l, "count"), l);
            saw_rays = true;
        } else if (l.starts_with("RAY ")) {
            r.rays.push_back(parse_vector(l.substr(4), r.meta.dim, l));
        } else if (l.starts_with("MAXIMAL ")) {
            const int dim = static_cast<int>(to_size(field(l, "dim"), l));
            r.maximal_by_dim[dim] = to_size(field(l, "count"), l);
            r.have_maximal = true;
        } else {
            bad("unknown line", l);
        }
    }
    if (!saw_rays || expected_rays != r.rays.size()) bad("ray count mismatch", line);
    return r;
}

StreamingSink::StreamingSink(std::size_t ambient_dim) : dim_(ambient_dim), file_(std::tmpfile()) {
    if (!file_) throw IoError("cannot create a temporary file for output cones");
}

StreamingSink::~StreamingSink() {
    std::fclose(file_);
}

void StreamingSink::emit(OutputCone&& cone) {
    const std::string line = format_cone(closure_key(cone.cone)) + "\n";
    std::lock_guard lock(mutex_);
    if (std::fputs(line.c_str(), file_) == EOF) {
        throw IoError("write to temporary cone file failed");
    }
    ++count_;
}

std::size_t StreamingSink::emitted() const {
    std::lock_guard lock(mutex_);
    return count_;
}

std::vector<ClosureKey> StreamingSink::closures() {
    std::lock_guard lock(mutex_);
    std::fflush(file_);
    std::rewind(file_);
    std::set<std::string> lines;
    std::string current;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, file_)) {
        current += buf;
        if (!current.empty() && current.back() == '\n') {
            current.pop_back();
            lines.insert(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) lines.insert(std::move(current));
    std::fseek(file_, 0, SEEK_END);
    std::set<ClosureKey> keys;
    for (const auto& l : lines) keys.insert(parse_cone(l, dim_));
    return {keys.begin(), keys.end()};
}

}  // namespace prevariety
