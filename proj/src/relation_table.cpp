#include "relation_table.hpp"

#include <bit>
#include <stdexcept>

namespace prevariety {

TableLayout::TableLayout(const std::vector<std::size_t>& fan_sizes) : sizes_(fan_sizes) {
    offsets_.reserve(sizes_.size());
    for (auto s : sizes_) {
        offsets_.push_back(total_);
        total_ += s;
    }
}

RelationTable::RelationTable(std::shared_ptr<const TableLayout> layout, bool fill)
    : layout_(std::move(layout)), words_((layout_->total_bits() + 63) / 64, 0) {
    if (!fill) return;
    for (auto& w : words_) w = ~uint64_t{0};
    const std::size_t tail = layout_->total_bits() % 64;
    if (tail != 0) words_.back() = (uint64_t{1} << tail) - 1;
}

RelationTable RelationTable::from_string(std::string_view bits) {
    RelationTable t(std::make_shared<const TableLayout>(std::vector<std::size_t>{bits.size()}),
                    false);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            t.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("relation table string must be 0/1");
        }
    }
    return t;
}

std::string RelationTable::to_string() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

void RelationTable::set(std::size_t i, bool value) {
    const uint64_t mask = uint64_t{1} << (i % 64);
    if (value) {
        words_[i / 64] |= mask;
    } else {
        words_[i / 64] &= ~mask;
    }
}

std::size_t RelationTable::popcount_range(std::size_t begin, std::size_t end) const {
    std::size_t count = 0;
    while (begin < end) {
        const std::size_t word = begin / 64;
        const std::size_t lo = begin % 64;
        const std::size_t hi = std::min<std::size_t>(64, lo + (end - begin));
        uint64_t mask = (hi == 64 ? ~uint64_t{0} : ((uint64_t{1} << hi) - 1));
        mask &= ~((uint64_t{1} << lo) - 1);
        count += static_cast<std::size_t>(std::popcount(words_[word] & mask));
        begin += hi - lo;
    }
    return count;
}

std::size_t RelationTable::popcount() const {
    return popcount_range(0, size());
}

std::size_t RelationTable::block_popcount(std::size_t fan) const {
    const std::size_t off = layout_->offset(fan);
    return popcount_range(off, off + layout_->block_size(fan));
}

void RelationTable::clear_block(std::size_t fan) {
    const std::size_t off = layout_->offset(fan);
    for (std::size_t i = 0; i < layout_->block_size(fan); ++i) set(off + i, false);
}

RelationTable and_tables(const RelationTable& a, const RelationTable& b) {
    if (!a.layout_ || !b.layout_ || (a.layout_ != b.layout_ && !(*a.layout_ == *b.layout_))) {
        throw std::logic_error("and_tables: layout mismatch");
    }
    RelationTable r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
}

bool operator==(const RelationTable& a, const RelationTable& b) {
    if (a.size() != b.size()) return false;
    return a.words_ == b.words_;
}

}  // namespace prevariety
