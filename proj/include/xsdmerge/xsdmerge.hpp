#pragma once

#include "xsdmerge/data_types.hpp"
#include "xsdmerge/dictionaries.hpp"
#include "xsdmerge/error.hpp"
#include "xsdmerge/eval.hpp"
#include "xsdmerge/instance_reader.hpp"
#include "xsdmerge/integrator.hpp"
#include "xsdmerge/interscheme.hpp"
#include "xsdmerge/json_io.hpp"
#include "xsdmerge/matching.hpp"
#include "xsdmerge/schema_model.hpp"
#include "xsdmerge/thesaurus.hpp"
#include "xsdmerge/xs_graph.hpp"
