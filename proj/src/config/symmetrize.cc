#include <dpdi/config.hh>
#include <dpdi/error.hh>

namespace dpdi
{
    namespace
    {
        void require_bidirected(const Configuration & conf)
        {
            if (! is_bidirected(conf.digraph))
                throw InvalidArgument("symmetry is only defined on bidirected digraphs");
        }
    }

    auto is_locally_symmetric(const Configuration & conf, Vertex v) -> bool
    {
        require_bidirected(conf);
        for (auto u : conf.digraph.out_neighbors(v))
            if (conf.cover.matching({u, v}) != transpose(conf.cover.matching({v, u})))
                return false;
        return true;
    }

    auto is_symmetric(const Configuration & conf) -> bool
    {
        require_bidirected(conf);
        for (Vertex v = 0; v < conf.digraph.order(); ++v)
            if (! is_locally_symmetric(conf, v))
                return false;
        return true;
    }

    auto symmetrize(const Configuration & conf) -> Configuration
    {
        require_bidirected(conf);
        auto result = conf;
        for (Vertex v = 0; v < result.digraph.order(); ++v) {
            if (is_locally_symmetric(result, v))
                continue;
            // Only matchings into v change, so vertices already swept keep
            // their local symmetry.
            for (auto u : result.digraph.out_neighbors(v))
                result.cover.matchings[{u, v}] = transpose(result.cover.matching({v, u}));
        }
        return result;
    }
}
