#pragma once

#include <initializer_list>
#include <utility>

#include "countkern/graph.hpp"

namespace testutil {

inline countkern::Graph make(std::size_t n, std::initializer_list<std::pair<countkern::Vertex, countkern::Vertex>> edges)
{
	countkern::Graph g(n);
	for (auto [a, b] : edges)
		g.add_edge(a, b);
	return g;
}

inline countkern::Graph complete(std::size_t n)
{
	countkern::Graph g(n);
	for (countkern::Vertex a = 0; a < n; ++a)
		for (countkern::Vertex b = a + 1; b < n; ++b)
			g.add_edge(a, b);
	return g;
}

inline countkern::Graph cycle(std::size_t n)
{
	countkern::Graph g(n);
	for (countkern::Vertex v = 0; v < n; ++v)
		g.add_edge(v, static_cast<countkern::Vertex>((v + 1) % n));
	return g;
}

inline countkern::Graph path(std::size_t n)
{
	countkern::Graph g(n);
	for (countkern::Vertex v = 0; v + 1 < n; ++v)
		g.add_edge(v, v + 1);
	return g;
}

inline countkern::Graph star(std::size_t leaves)
{
	countkern::Graph g(leaves + 1);
	for (countkern::Vertex v = 1; v <= leaves; ++v)
		g.add_edge(0, v);
	return g;
}

/// Disjoint union.
inline countkern::Graph operator+(const countkern::Graph &a, const countkern::Graph &b)
{
	countkern::Graph g(a.n() + b.n());
	for (const auto &e : a.edges())
		g.add_edge(e.u, e.v);
	for (const auto &e : b.edges())
		g.add_edge(static_cast<countkern::Vertex>(e.u + a.n()), static_cast<countkern::Vertex>(e.v + a.n()));
	return g;
}

} // namespace testutil
