#include "parttree/enumerate.hpp"

#include <stdexcept>

#include "parttree/bounds.hpp"

namespace parttree {

PartitionStream::PartitionStream(PartitionSpec spec) : spec_(spec) {
    if (spec_.top_level() >= 1)
        odo_.emplace(spec_, 1);
}

std::optional<Partition> PartitionStream::next() {
    if (exhausted_)
        return std::nullopt;
    if (!odo_) {
        // single-row instances: (n), all ones, or (2, 1, ..., 1)
        exhausted_ = true;
        return detail::build_row(spec_, {}, 0);
    }
    if (odo_->done()) {
        exhausted_ = true;
        return std::nullopt;
    }
    Partition row = detail::build_row(spec_, odo_->values_by_level(), odo_->shifted());
    odo_->advance();
    return row;
}

AllPartitionsStream::AllPartitionsStream(std::uint64_t n) : n_(n) {
    if (n_ < 1)
        throw std::invalid_argument("AllPartitionsStream: n must be >= 1");
    current_.emplace(PartitionSpec(n_, m_));
}

std::optional<std::pair<std::uint64_t, Partition>> AllPartitionsStream::next() {
    while (current_) {
        if (auto row = current_->next())
            return std::make_pair(m_, std::move(*row));
        if (m_ == n_) {
            current_.reset();
            break;
        }
        ++m_;
        current_.emplace(PartitionSpec(n_, m_));
    }
    return std::nullopt;
}

LevelCount visit_prefixes(const PartitionSpec& spec, std::uint64_t level,
                          const PrefixVisitor& visit) {
    if (!spec.has_tree())
        throw std::domain_error("visit_prefixes: instance has no tree");
    const std::uint64_t top = spec.top_level();
    if (level < 1 || level > top)
        throw std::domain_error("visit_prefixes: level out of range");
    Count visits = 0;
    std::vector<std::uint64_t> prefix(top - level + 1);
    for (detail::JOdometer odo(spec, level); !odo.done(); odo.advance()) {
        if (visit) {
            for (std::uint64_t a = top; a >= level; --a)
                prefix[top - a] = odo.value(a);
            visit(prefix);
        }
        ++visits;
    }
    return {level, visits};
}

LevelCount visit_prefixes(const PartitionSpec& spec, std::uint64_t level) {
    return visit_prefixes(spec, level, PrefixVisitor());
}

}  // namespace parttree
