#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace prevariety {

/// Block offsets of each fan inside a relation table, fixed at load time.
class TableLayout {
public:
    TableLayout() = default;
    explicit TableLayout(const std::vector<std::size_t>& fan_sizes);

    std::size_t fan_count() const { return sizes_.size(); }
    std::size_t offset(std::size_t fan) const { return offsets_[fan]; }
    std::size_t block_size(std::size_t fan) const { return sizes_[fan]; }
    std::size_t total_bits() const { return total_; }
    std::size_t bit(std::size_t fan, std::size_t cone) const { return offsets_[fan] + cone; }

    friend bool operator==(const TableLayout&, const TableLayout&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> sizes_;
    std::size_t total_ = 0;
};

/// One bit per cone of every fan: 0 means the owner certainly misses that
/// cone, 1 means the intersection may be nonempty.
class RelationTable {
public:
    RelationTable() = default;
    RelationTable(std::shared_ptr<const TableLayout> layout, bool fill);

    // Single-block table, e.g. "001011010".
    static RelationTable from_string(std::string_view bits);
    std::string to_string() const;

    const TableLayout& layout() const { return *layout_; }
    const std::shared_ptr<const TableLayout>& layout_ptr() const { return layout_; }
    std::size_t size() const { return layout_ ? layout_->total_bits() : 0; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true);
    bool test(std::size_t fan, std::size_t cone) const { return test(layout_->bit(fan, cone)); }

    std::size_t popcount() const;
    std::size_t block_popcount(std::size_t fan) const;
    void clear_block(std::size_t fan);

    friend RelationTable and_tables(const RelationTable& a, const RelationTable& b);
    friend bool operator==(const RelationTable& a, const RelationTable& b);

private:
    std::size_t popcount_range(std::size_t begin, std::size_t end) const;

    std::shared_ptr<const TableLayout> layout_;
    std::vector<uint64_t> words_;
};

}  // namespace prevariety
