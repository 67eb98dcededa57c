#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace helixcipher {

enum class Direction { kForward, kBackward };

/// How non-ACGT symbols are treated on load and during windowing.
/// kReject fails with the 1-based position of the first offender.
/// kSkipWindows accepts IUPAC ambiguity codes in the sequence and drops
/// any window containing one, reporting the drop count. No mode keeps
/// an ambiguity code inside a window.
enum class AmbiguityPolicy { kReject, kSkipWindows };

/// A validated nucleotide sequence with 1-based coordinates.
struct GenomeSequence {
    std::string id;     ///< record identifier ("" for raw-text input)
    std::string bases;  ///< uppercase symbols, genome order

    uint64_t length() const { return bases.size(); }
};

struct FastaLoad {
    GenomeSequence sequence;
    /// Identifiers of records after the first; only the first record is
    /// analyzed.
    std::vector<std::string> skipped_records;
};

/// Parses a single-record FASTA stream, or a raw base string when no
/// '>' header is present. Line breaks and inner whitespace are
/// stripped, lowercase bases are uppercased. Under kReject any symbol
/// outside {A,C,G,T} raises ValidationError with its position; under
/// kSkipWindows the IUPAC ambiguity codes are kept for extract_windows
/// to filter.
FastaLoad load_fasta(std::istream& source, AmbiguityPolicy policy = AmbiguityPolicy::kReject);
FastaLoad load_fasta(const std::string& content, AmbiguityPolicy policy = AmbiguityPolicy::kReject);
FastaLoad load_fasta_file(const std::string& path, AmbiguityPolicy policy = AmbiguityPolicy::kReject);

/// Serializes back to FASTA (or to a bare base string when the id is
/// empty). Re-parsing the output preserves the base string exactly.
std::string to_fasta(const GenomeSequence& seq, std::size_t line_width = 70);

/// One helix turn: a fixed-size slice of the genome. Bases are kept in
/// genome order regardless of the walk direction used to emit the
/// window; composition counting is order-invariant, so the walk
/// direction only decides which coordinates get windowed.
struct TurnWindow {
    uint64_t start = 0;  ///< 1-based inclusive lower coordinate
    std::string bases;   ///< genome order, size() symbols

    uint64_t size() const { return bases.size(); }
    uint64_t end() const { return start + bases.size() - 1; }  ///< 1-based inclusive
};

struct WindowExtraction {
    std::vector<TurnWindow> windows;
    uint64_t dropped = 0;  ///< windows removed under kSkipWindows
};

/// Slices `count` consecutive non-overlapping windows of `size` bases
/// anchored at the 1-based coordinate `anchor`.
///
/// Backward emits [anchor-size+1, anchor], [anchor-2*size+1,
/// anchor-size], ... walking toward coordinate 1; forward is the
/// mirror, starting at [anchor, anchor+size-1]. A count of 0 yields an
/// empty list. Raises PreconditionError when the sequence cannot supply
/// count*size bases on the requested side of the anchor.
WindowExtraction extract_windows(const GenomeSequence& seq, uint64_t anchor, uint64_t count,
                                 Direction direction, uint32_t size = 10,
                                 AmbiguityPolicy policy = AmbiguityPolicy::kReject);

}  // namespace helixcipher
