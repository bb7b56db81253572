#include "countkern/compositions.hpp"
#include "countkern/framework.hpp"
#include "countkern/vc_kernel.hpp"

namespace countkern {

namespace {

Registry build_registry()
{
	Registry r;
	for (auto p : {Problem::vertex_cover, Problem::minimal_vertex_cover, Problem::odd_cycle_transversal, Problem::min_st_cut})
		r.add(identity_compression(p));
	r.add(vc::vc_kernel());
	r.add(vc::minimal_vc_kernel());
	r.add(compose::mincut_to_oct());
	r.add(compose::oct_to_vc(false));
	r.add(compose::oct_to_vc(true));
	r.add(compose_ppt_compression(compose::mincut_to_oct(), identity_compression(Problem::odd_cycle_transversal)));
	r.add(compose_ppt_compression(compose::mincut_to_oct(), compose::oct_to_vc(false)));
	r.add(compose_ppt_compression(compose::mincut_to_oct(),
	                              compose_ppt_compression(compose::oct_to_vc(false), identity_compression(Problem::vertex_cover))));
	return r;
}

} // namespace

const Registry &registry()
{
	static const Registry r = build_registry();
	return r;
}

} // namespace countkern
