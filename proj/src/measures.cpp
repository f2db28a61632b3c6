#include "angelesco/measures.hpp"

namespace angelesco {

template MomentTable<Complex> compute_moment_table<Complex>(const ModelParams<Complex>&, int, int,
                                                            const Real&);
template MomentTable<Complex> compute_moment_table_fixed<Complex>(const ModelParams<Complex>&, int,
                                                                  int, long);

}  // namespace angelesco
