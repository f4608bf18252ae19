#pragma once

#include "postprocess.hpp"

#include <cstdio>
#include <iosfwd>
#include <mutex>
#include <string>
#include <string_view>

namespace prevariety {

// CONE dim=<d> eq={(..);(..)} ineq={(..);(..)}
std::string format_cone(const ClosureKey& key);
ClosureKey parse_cone(std::string_view line, std::size_t ambient_dim);

void serialize(const PrevarietyResult& r, std::ostream& out);
std::string serialize(const PrevarietyResult& r);
// Throws std::runtime_error when the file cannot be written.
void write_result(const PrevarietyResult& r, const std::string& path);

// Restores the serialized fields (stats are not serialized).
PrevarietyResult parse_result(std::string_view text);

/// Writes the closure of every emitted cone to an anonymous temporary file;
/// closures() reads them back sorted and deduplicated.
class StreamingSink final : public ConeSink {
public:
    explicit StreamingSink(std::size_t ambient_dim);
    ~StreamingSink() override;
    StreamingSink(const StreamingSink&) = delete;
    StreamingSink& operator=(const StreamingSink&) = delete;

    void emit(OutputCone&& cone) override;
    std::size_t emitted() const;
    std::vector<ClosureKey> closures();

private:
    std::size_t dim_;
    mutable std::mutex mutex_;
    std::FILE* file_;
    std::size_t count_ = 0;
};

}  // namespace prevariety
