#pragma once

#include <nmg/audit.hpp>
#include <nmg/canonical.hpp>
#include <nmg/core.hpp>
#include <nmg/corpus.hpp>
#include <nmg/graph.hpp>
#include <nmg/homomorphism.hpp>
#include <nmg/io.hpp>
#include <nmg/planarity.hpp>
#include <nmg/search.hpp>
#include <nmg/seeing.hpp>
#include <nmg/structure.hpp>
