#include "helixcipher/genome_io.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "helixcipher/errors.hpp"
#include "oracles.hpp"

using namespace helixcipher;

TEST_CASE("load_fasta parses a single record") {
    const auto load = load_fasta(std::string(">x\nACGT\nTTAA\n"));
    CHECK(load.sequence.id == "x");
    CHECK(load.sequence.bases == "ACGTTTAA");
    CHECK(load.sequence.length() == 8);
    CHECK(load.skipped_records.empty());
}

TEST_CASE("load_fasta uppercases") {
    CHECK(load_fasta(std::string(">x\nacgt\n")).sequence.bases == "ACGT");
}

TEST_CASE("load_fasta accepts raw base text without a header") {
    const auto load = load_fasta(std::string("ACgt\nTT\n"));
    CHECK(load.sequence.id.empty());
    CHECK(load.sequence.bases == "ACGTTT");
}

TEST_CASE("load_fasta rejects ambiguity codes with the offending position") {
    CHECK_THROWS_WITH_AS(load_fasta(std::string(">x\nACGN\n")),
                         "invalid symbol 'N' at sequence position 4", ValidationError);
    CHECK_THROWS_AS(load_fasta(std::string(">x\nAC!T\n"), AmbiguityPolicy::kSkipWindows),
                    ValidationError);
}

TEST_CASE("load_fasta keeps IUPAC codes when windows will be skipped") {
    const auto load = load_fasta(std::string(">x\nACGN\n"), AmbiguityPolicy::kSkipWindows);
    CHECK(load.sequence.bases == "ACGN");
}

TEST_CASE("load_fasta rejects empty input") {
    CHECK_THROWS_AS(load_fasta(std::string("")), ValidationError);
    CHECK_THROWS_AS(load_fasta(std::string(">only-a-header\n")), ValidationError);
}

TEST_CASE("load_fasta analyzes only the first of several records") {
    const auto load = load_fasta(std::string(">first one\nACGT\n>second\nGGGG\n>third\nTTTT\n"));
    CHECK(load.sequence.id == "first");
    CHECK(load.sequence.bases == "ACGT");
    CHECK(load.skipped_records == std::vector<std::string>{"second", "third"});
}

TEST_CASE("load_fasta handles CRLF line endings") {
    CHECK(load_fasta(std::string(">x\r\nACGT\r\n")).sequence.bases == "ACGT");
}

TEST_CASE("FASTA round trip preserves the base string") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        GenomeSequence seq{"record" + std::to_string(i), oracle::random_bases(rng, 1 + rng() % 300)};
        const auto width = static_cast<std::size_t>(1 + rng() % 90);
        const auto reparsed = load_fasta(to_fasta(seq, width));
        CHECK(reparsed.sequence.bases == seq.bases);
        CHECK(reparsed.sequence.id == seq.id);
    }
}

TEST_CASE("extract_windows walks backward in emission order") {
    std::mt19937_64 rng(11);
    GenomeSequence seq{"t", oracle::random_bases(rng, 100)};
    const auto result = extract_windows(seq, 100, 3, Direction::kBackward, 10);
    REQUIRE(result.windows.size() == 3);
    CHECK(result.windows[0].start == 91);
    CHECK(result.windows[0].end() == 100);
    CHECK(result.windows[1].start == 81);
    CHECK(result.windows[2].start == 71);
    CHECK(result.windows[0].bases == seq.bases.substr(90, 10));
    CHECK(result.windows[2].bases == seq.bases.substr(70, 10));
}

TEST_CASE("extract_windows covers the documented default span") {
    std::mt19937_64 rng(13);
    GenomeSequence seq{"t4-sized", oracle::random_bases(rng, 168903)};
    const auto result = extract_windows(seq, 168900, 3183, Direction::kBackward, 10);
    REQUIRE(result.windows.size() == 3183);
    CHECK(result.windows.front().start == 168891);
    CHECK(result.windows.front().end() == 168900);
    CHECK(result.windows.back().start == 137071);
    CHECK(result.windows.back().end() == 137080);
}

TEST_CASE("extract_windows boundary behaviour") {
    std::mt19937_64 rng(17);
    GenomeSequence seq{"ten", oracle::random_bases(rng, 10)};
    const auto one = extract_windows(seq, 10, 1, Direction::kBackward, 10);
    REQUIRE(one.windows.size() == 1);
    CHECK(one.windows[0].start == 1);
    CHECK(one.windows[0].end() == 10);

    CHECK_THROWS_AS(extract_windows(seq, 10, 2, Direction::kBackward, 10), PreconditionError);
    CHECK(extract_windows(seq, 10, 0, Direction::kBackward, 10).windows.empty());
    CHECK_THROWS_AS(extract_windows(seq, 11, 1, Direction::kBackward, 10), PreconditionError);
    CHECK_THROWS_AS(extract_windows(seq, 2, 1, Direction::kForward, 10), PreconditionError);
    CHECK_THROWS_AS(extract_windows(seq, 5, 1, Direction::kBackward, 0), PreconditionError);
}

TEST_CASE("forward extraction mirrors backward extraction") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 40; ++i) {
        const uint64_t length = 50 + rng() % 200;
        GenomeSequence seq{"m", oracle::random_bases(rng, length)};
        const uint32_t size = static_cast<uint32_t>(1 + rng() % 12);
        const uint64_t max_count = length / size;
        if (max_count == 0) continue;
        const uint64_t count = 1 + rng() % max_count;
        const uint64_t anchor = count * size + rng() % (length - count * size + 1);

        const auto backward = extract_windows(seq, anchor, count, Direction::kBackward, size);
        const auto forward =
            extract_windows(seq, anchor - count * size + 1, count, Direction::kForward, size);
        REQUIRE(backward.windows.size() == forward.windows.size());
        for (std::size_t w = 0; w < backward.windows.size(); ++w) {
            const auto& b = backward.windows[w];
            const auto& f = forward.windows[forward.windows.size() - 1 - w];
            CHECK(b.start == f.start);
            CHECK(b.bases == f.bases);
        }
    }
}

TEST_CASE("windows are contiguous, non-overlapping and cover count*size bases") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const uint64_t length = 60 + rng() % 100;
        GenomeSequence seq{"c", oracle::random_bases(rng, length)};
        const uint32_t size = static_cast<uint32_t>(1 + rng() % 9);
        const uint64_t count = 1 + rng() % (length / size);
        const bool backward = rng() % 2 == 0;
        const uint64_t anchor = backward ? count * size + rng() % (length - count * size + 1)
                                         : 1 + rng() % (length - count * size + 1);
        const auto result = extract_windows(seq, anchor, count,
                                            backward ? Direction::kBackward : Direction::kForward, size);
        std::vector<uint64_t> starts;
        for (const auto& w : result.windows) {
            CHECK(w.size() == size);
            starts.push_back(w.start);
        }
        std::sort(starts.begin(), starts.end());
        for (std::size_t w = 1; w < starts.size(); ++w) {
            CHECK(starts[w] - starts[w - 1] == size);
        }
        CHECK(starts.back() + size - starts.front() == count * size);
    }
}

TEST_CASE("the loader either parses or raises a clean error on arbitrary bytes") {
    std::mt19937_64 rng(109);
    const std::string pool = ">ACGTacgtnNRY \t\r\n!0-";
    for (int i = 0; i < 500; ++i) {
        std::string blob;
        const std::size_t length = rng() % 64;
        for (std::size_t b = 0; b < length; ++b) blob.push_back(pool[rng() % pool.size()]);
        for (auto policy : {AmbiguityPolicy::kReject, AmbiguityPolicy::kSkipWindows}) {
            try {
                const auto load = load_fasta(blob, policy);
                CHECK(!load.sequence.bases.empty());
            } catch (const Error&) {
                // fine: must be one of ours, never a crash or foreign type
            }
        }
    }
}

TEST_CASE("skip-ambiguous drops exactly the windows containing a code") {
    GenomeSequence seq{"n", "ACGTACGTAANCGTACGTAC"};  // N at coordinate 11
    const auto result = extract_windows(seq, 20, 2, Direction::kBackward, 10,
                                        AmbiguityPolicy::kSkipWindows);
    CHECK(result.dropped == 1);
    REQUIRE(result.windows.size() == 1);
    CHECK(result.windows[0].start == 1);
}
