#include "fdb/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace fdb {

namespace {

void override_from(const char* name, std::size_t& field)
{
    const char* value = std::getenv(name);
    if (value == nullptr) {
        return;
    }
    std::size_t parsed = 0;
    const char* end = value + std::strlen(value);
    auto [ptr, ec] = std::from_chars(value, end, parsed);
    if (ec == std::errc{} && ptr == end) {
        field = parsed;
    }
}

} // namespace

Limits Limits::from_environment()
{
    Limits limits;
    override_from("FDB_SET_PARTITION_LIMIT", limits.set_partition_size);
    override_from("FDB_MULTISET_PARTITION_LIMIT", limits.multiset_partition_count);
    override_from("FDB_ORACLE_LIMIT", limits.oracle_size);
    override_from("FDB_SWEEP_LIMIT", limits.bruteforce_sweep_size);
    return limits;
}

} // namespace fdb
