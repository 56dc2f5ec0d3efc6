//! Every crate example runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main().expect(concat!(stringify!($name), " example failed"));
            }
        }
    };
}

example!(geometry_ops);
example!(corner_search);
example!(overshooting);
example!(max_cube);
example!(infinite_concepts);
example!(monadic_decomposition);
example!(benchmark_families);
example!(adversary);
