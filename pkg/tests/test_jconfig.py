import pytest

from jconfig import Config, ConfigSyntaxError
from jconfig.memory import MemoryConfig


def test_config_section():
    c = MemoryConfig('secret')

    assert 'secret' in c._settings

    c.test = 'hello!'

    assert c['test'] == 'hello!'
    assert c.test == 'hello!'
    assert c._section == {'test': 'hello!'}

    c['test'] = '42'

    assert c['test'] == '42'
    assert c.test == '42'
    assert c._section == {'test': '42'}


def test_memory_config_values_are_strings():
    c = MemoryConfig('model', settings={'model': {'grid_size': 8, 'family': 'diagonal'}})

    assert c.grid_size == '8'
    assert c.sections() == ['model']
    assert c.position('model', 'grid_size') is None


def test_file_config(tmp_path):
    path = tmp_path / 'scenario.cfg'
    path.write_text(
        u'# comment\n'
        u'[model]\n'
        u'family = explicit\n'
        u'state_1 = 1,0 0,0\n'
        u'          0,0 0,0\n'
        u'\n'
        u'; another comment\n'
        u'[alpha]\n'
        u'values=-1, 0\n'
    )

    c = Config('model', filename=str(path))

    assert c.sections() == ['model', 'alpha']
    assert c.family == 'explicit'
    assert c.state_1 == '1,0 0,0 0,0 0,0'
    assert c.get_section('alpha') == {'values': '-1, 0'}
    assert c.position('model', 'family') == (3, 10)
    assert c.position('alpha', 'values') == (9, 8)
    assert c.position('alpha') == (8, 1)


@pytest.mark.parametrize('text, line', [
    (u'key = 1\n', 1),
    (u'[model]\nnot a pair\n', 2),
    (u'[model]\n[model]\n', 2),
    (u'[model]\na = 1\na = 2\n', 3),
    (u'[model\n', 1),
    (u'[model]\n  continued\n', 2),
])
def test_syntax_errors(tmp_path, text, line):
    path = tmp_path / 'bad.cfg'
    path.write_text(text)

    with pytest.raises(ConfigSyntaxError) as e:
        Config('model', filename=str(path))

    assert e.value.line == line
    assert str(e.value).startswith('{}:{}:'.format(path, line))


def test_save_round_trip(tmp_path):
    path = str(tmp_path / 'saved.cfg')

    c = Config('scenario', filename=path, missing_ok=True)
    c.id = 's1'
    c.seed = '42'
    c.save()

    loaded = Config('scenario', filename=path)

    assert loaded.id == 's1'
    assert loaded.seed == '42'


def test_missing_file(tmp_path):
    with pytest.raises(IOError):
        Config('scenario', filename=str(tmp_path / 'missing.cfg'))
