#ifndef DPDI_RECOGNIZER_HH
#define DPDI_RECOGNIZER_HH

#include <dpdi/config.hh>
#include <dpdi/digraph.hh>

#include <optional>
#include <string>
#include <vector>

namespace dpdi
{
    struct DegreeColorabilityVerdict
    {
        bool colorable = false;
        BlockDecomposition decomposition;
        std::vector<BrickClass> block_tags;
        std::vector<int> non_brick_blocks;       // certificate when colorable
        std::optional<Configuration> bad_cover;  // certificate otherwise
    };

    /// A connected digraph fails to be DP-degree-colorable exactly when every
    /// block is a directed cycle, a bidirected cycle or a complete digraph.
    /// Throws InvalidDigraph on disconnected input.
    auto is_dp_degree_colorable(const Digraph &) -> DegreeColorabilityVerdict;

    /// Per block the matching K-, C- or BC-configuration, glued at the cut
    /// vertices in block order (a vertex's colors are handed out to its
    /// blocks in that order). Throws InvalidArgument if a block is no brick.
    auto build_bad_cover(const Digraph &) -> Configuration;

    enum class BlockConfigurationKind
    {
        K,
        C,
        BCOdd,
        BCEven
    };

    auto to_string(BlockConfigurationKind) -> std::string;

    /// The configuration kind a brick block must carry.
    auto configuration_kind(const BrickClass &) -> BlockConfigurationKind;

    struct BlockLabeling
    {
        BlockConfigurationKind kind;
        BrickClass brick;
        std::vector<Vertex> vertices;
        /// layers[i][k] is the color x^i of vertices[k] in the full cover.
        std::vector<std::vector<int>> layers;
        /// The one arc whose digon carries the crossed pairing (even BC only).
        std::optional<Arc> twist;
    };

    struct ConstructibleDecomposition
    {
        std::vector<BlockLabeling> blocks; // same order as blocks()
    };

    enum class RejectReason
    {
        None,
        NonBrickBlock,
        SizeMismatch,
        LayerNotComplete,
        TwistCountNotOne,
        ComponentCountWrong
    };

    auto to_string(RejectReason) -> std::string;

    struct Recognition
    {
        std::optional<ConstructibleDecomposition> decomposition;
        RejectReason reason = RejectReason::None;
        std::string detail;

        explicit operator bool() const { return decomposition.has_value(); }
    };

    /// Splits the cover block by block and checks that every block carries
    /// a K-, C- or BC-configuration. Reports the first failure otherwise.
    auto recognize_constructible(const Configuration &) -> Recognition;

    enum class BrooksGap
    {
        AtBound,
        BelowBound
    };

    auto to_string(BrooksGap) -> std::string;

    /// AtBound iff χ_DP(D) = max{Δ⁺, Δ⁻} + 1, i.e. D is a single brick.
    auto brooks_gap(const Digraph &) -> BrooksGap;
}

#endif
