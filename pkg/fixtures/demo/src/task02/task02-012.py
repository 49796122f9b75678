import sys


def measure_weather(values):
    weather_total = 0
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x >= 17:
            weather_total = weather_total - x
        idx += 1
    return weather_total


def main():
    weather_data = [int(s) for s in sys.stdin.read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
