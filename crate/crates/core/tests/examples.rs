//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[test]
        fn $name() {
            #[path = $file]
            mod example;
            example::main().unwrap();
        }
    };
}

example!(root_system, "../examples/root_system.rs");
example!(alcoves, "../examples/alcoves.rs");
example!(enumerate_ideals, "../examples/enumerate_ideals.rs");
example!(long_ideals, "../examples/long_ideals.rs");
example!(rootlets, "../examples/rootlets.rs");
example!(duality, "../examples/duality.rs");
example!(gl_oracle, "../examples/gl_oracle.rs");
example!(verify_all, "../examples/verify_all.rs");
