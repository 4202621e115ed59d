# -*- coding: utf-8 -*-

# --------------------------------------------------------------------
# augforge, MIT License.
# Copyright (c) 2026 augforge developers. See LICENSE for details.
# --------------------------------------------------------------------
"""cGAN files.

A trained cGAN is a directory with two model files and a manifest::

    AUGFORGE-CGAN v1
    cgan.noise_dim=32
    ...
    model.baseline=<sha256 of the frozen baseline>
    model.num_classes=2
    model.generator=generator.model
    model.discriminator=discriminator.model
"""

__all__ = [
    'save_cgan', 'load_cgan', 'write_telemetry', 'CGanFileError',
    'TELEMETRY_HEADER'
]

from csv import writer

from io import open

from os.path import join

from ..conf.driver.file.kv import KVFileConfDriver
from ..conf.model.cat import category
from ..conf.model.conf import configuration
from ..conf.model.param import Parameter
from ..nn.io import load_model, save_model
from .config import CATEGORY, CGanConfig
from .core import TrainedCGan

MAGIC = 'AUGFORGE-CGAN'  #: manifest magic.
VERSION = 'v1'  #: manifest version.

MANIFEST = 'cgan.manifest'  #: manifest file name.
GENERATOR = 'generator.model'  #: default generator file name.
DISCRIMINATOR = 'discriminator.model'  #: default discriminator file name.

MODEL = 'model'  #: manifest category of model references.

#: telemetry CSV header.
TELEMETRY_HEADER = ('iter', 'phase', 'L_D', 'L_G1', 'L_G2', 'lambda', 'u')


class CGanFileError(ValueError):
    """Unreadable cGAN manifest."""


def save_cgan(cgan, dirpath, generator=GENERATOR, discriminator=DISCRIMINATOR):
    """Write the manifest and model files of cgan into dirpath.

    :return: manifest path.
    :rtype: str
    """

    save_model(cgan.generator, join(dirpath, generator))
    save_model(cgan.discriminator, join(dirpath, discriminator))

    conf = configuration(
        cgan.config.category(),
        category(
            MODEL,
            Parameter('baseline', value=cgan.baseline_ref),
            Parameter('num_classes', value=cgan.num_classes),
            Parameter('generator', value=generator),
            Parameter('discriminator', value=discriminator)
        )
    )

    path = join(dirpath, MANIFEST)

    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write('{0} {1}\n'.format(MAGIC, VERSION))
        handle.write(KVFileConfDriver().dumps(conf))

    return path


def load_cgan(dirpath, logger=None):
    """Read a cGAN directory written by save_cgan. Telemetry is not restored.

    :rtype: TrainedCGan
    :raises: CGanFileError, nn.io.ModelFileError.
    """

    path = join(dirpath, MANIFEST)

    with open(path, 'r', encoding='utf-8') as handle:
        header = handle.readline().split()
        text = handle.read()

    if header != [MAGIC, VERSION]:
        raise CGanFileError(
            '{0}: {1} {2} header expected.'.format(path, MAGIC, VERSION)
        )

    driver = KVFileConfDriver()

    try:
        resource = driver.loads(text, rscpath=path)

        declared = CGanConfig.declare()

        for pname, svalue in resource.get(CATEGORY, {}).items():
            if pname not in declared:
                raise CGanFileError('Unknown key {0}.{1}'.format(
                    CATEGORY, pname
                ))
            declared[pname].svalue = svalue

        config = CGanConfig.fromcat(declared)

        models = resource[MODEL]
        num_classes = int(models['num_classes'])

        cgan = TrainedCGan(
            generator=load_model(join(dirpath, models['generator'])),
            discriminator=load_model(join(dirpath, models['discriminator'])),
            baseline_ref=models['baseline'], config=config,
            num_classes=num_classes
        )

    except (KeyError, ValueError, Parameter.Error, driver.Error) as ex:
        if logger is not None:
            logger.error('Wrong cgan manifest {0}: {1}'.format(path, ex))
        raise CGanFileError('{0}: {1}'.format(path, ex))

    return cgan


def write_telemetry(records, path):
    """Write telemetry records as CSV with TELEMETRY_HEADER."""

    with open(path, 'w', encoding='utf-8', newline='') as handle:

        csv = writer(handle, lineterminator='\n')
        csv.writerow(TELEMETRY_HEADER)

        for record in records:
            csv.writerow([
                record.iteration, record.phase, repr(record.loss_d),
                repr(record.loss_g1), repr(record.loss_g2), repr(record.lam),
                record.updates
            ])
