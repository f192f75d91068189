#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/tables.md")]
mod tables {}

#[doc = include_str!("../../../book/src/shapes.md")]
mod shapes {}

#[doc = include_str!("../../../book/src/colimits.md")]
mod colimits {}

#[doc = include_str!("../../../book/src/pro.md")]
mod pro {}

#[doc = include_str!("../../../book/src/model.md")]
mod model {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
