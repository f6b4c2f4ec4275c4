#include "parttree.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "parttree/counting.hpp"
#include "parttree/enumerate.hpp"
#include "parttree/oracle.hpp"
#include "parttree/types.hpp"
#include "parttree/verify.hpp"

namespace {

// Copies a std::string into a malloc'd buffer so callers can release it
// with parttree_str_free regardless of which runtime they link.
int make_cstring(const std::string& text, char** out) {
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (copy == nullptr)
        return PARTTREE_ENOMEM;
    std::memcpy(copy, text.c_str(), text.size() + 1);
    *out = copy;
    return PARTTREE_OK;
}

// Runs the body and maps C++ exceptions onto status codes.  Argument
// errors surface as std::invalid_argument / std::domain_error inside the
// library; anything else is unexpected.
template <typename Fn>
int guarded(Fn&& body) {
    try {
        return body();
    } catch (const std::invalid_argument&) {
        return PARTTREE_EINVAL;
    } catch (const std::domain_error&) {
        return PARTTREE_EINVAL;
    } catch (const std::out_of_range&) {
        return PARTTREE_EINVAL;
    } catch (const std::bad_alloc&) {
        return PARTTREE_ENOMEM;
    } catch (...) {
        return PARTTREE_EINTERNAL;
    }
}

int count_to_out(const parttree::Count& value, char** out) {
    return make_cstring(value.str(), out);
}

}  // namespace

struct parttree_enum {
    std::variant<parttree::PartitionStream, parttree::AllPartitionsStream>
        stream;
    // Row produced but not yet copied out (buffer was too small).
    std::optional<parttree::Partition> pending;
};

extern "C" {

const char* parttree_version(void) { return "1.0.0"; }

const char* parttree_status_str(int status) {
    switch (status) {
        case PARTTREE_OK:
            return "ok";
        case PARTTREE_EINVAL:
            return "invalid argument";
        case PARTTREE_ENOMEM:
            return "out of memory";
        case PARTTREE_ENOSPACE:
            return "buffer too small";
        case PARTTREE_EVERIFY:
            return "verification mismatch";
        case PARTTREE_EINTERNAL:
            return "internal error";
        default:
            return "unknown status";
    }
}

void parttree_str_free(char* s) { std::free(s); }

int parttree_count_parts(uint64_t n, uint64_t m, char** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        return count_to_out(parttree::count_parts(parttree::PartitionSpec(n, m)),
                            out);
    });
}

int parttree_count_all(uint64_t n, char** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] { return count_to_out(parttree::count_all(n), out); });
}

int parttree_node_count(uint64_t n, uint64_t m, uint64_t level, char** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        const parttree::PartitionSpec spec(n, m);
        return count_to_out(parttree::node_count(spec, level).count, out);
    });
}

int parttree_dp_count_parts(uint64_t n, uint64_t m, char** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        if (m < 1 || m > n)
            return PARTTREE_EINVAL;
        return count_to_out(parttree::oracle::dp_count(n, m), out);
    });
}

int parttree_dp_count_all(uint64_t n, char** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        if (n < 1)
            return PARTTREE_EINVAL;
        return count_to_out(parttree::oracle::dp_total(n), out);
    });
}

int parttree_enum_new(uint64_t n, uint64_t m, parttree_enum** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        parttree::PartitionStream stream{parttree::PartitionSpec(n, m)};
        *out = new parttree_enum{std::move(stream), std::nullopt};
        return PARTTREE_OK;
    });
}

int parttree_enum_new_all(uint64_t n, parttree_enum** out) {
    if (out == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        parttree::AllPartitionsStream stream{n};
        *out = new parttree_enum{std::move(stream), std::nullopt};
        return PARTTREE_OK;
    });
}

int parttree_enum_next(parttree_enum* e, uint64_t* parts, size_t cap,
                       size_t* len) {
    if (e == nullptr || len == nullptr)
        return PARTTREE_EINVAL;
    if (parts == nullptr && cap > 0)
        return PARTTREE_EINVAL;
    return guarded([&] {
        if (!e->pending) {
            if (auto* one = std::get_if<parttree::PartitionStream>(&e->stream)) {
                e->pending = one->next();
            } else {
                auto& all = std::get<parttree::AllPartitionsStream>(e->stream);
                if (auto row = all.next())
                    e->pending = std::move(row->second);
            }
        }
        if (!e->pending)
            return 0;
        *len = e->pending->size();
        if (cap < e->pending->size())
            return PARTTREE_ENOSPACE;
        std::memcpy(parts, e->pending->data(),
                    e->pending->size() * sizeof(uint64_t));
        e->pending.reset();
        return 1;
    });
}

void parttree_enum_free(parttree_enum* e) { delete e; }

int parttree_verify(uint64_t n_max, char** report) {
    if (report == nullptr)
        return PARTTREE_EINVAL;
    return guarded([&] {
        const parttree::VerifyReport result = parttree::run_verify(n_max);
        const int status = make_cstring(result.text, report);
        if (status != PARTTREE_OK)
            return status;
        return result.ok ? PARTTREE_OK : PARTTREE_EVERIFY;
    });
}

}  // extern "C"
